#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "x0eq/ecurve.hpp"
#include "x0eq/relation.hpp"

namespace x0eq {

// Transcription problems are fixture-level errors, distinct from math
// failures; the CLI maps them to their own exit code.
class fixture_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InvolutionKind { kAtkinLehner, kS2, kS2ConjugateFricke };

struct Involution {
  InvolutionKind kind = InvolutionKind::kAtkinLehner;
  int64_t q = 0;  // Atkin-Lehner index, when applicable
  std::string as_printed;

  bool is_atkin_lehner() const { return kind == InvolutionKind::kAtkinLehner; }
  std::string str() const;
};

// One table row: everything needed to re-derive and check t^2 = P(x, y).
struct BiellipticDatum {
  int64_t level = 0;
  bool new_case = true;  // new (table 1/3/5) vs non-new (table 2/4/6)
  Involution w;
  WeierstrassCurve curve;
  HRecipe h_recipe;
  std::string h_printed;
  TSpec t_spec;
  std::string t_printed;
  ModelPolynomial expected_p;
  std::vector<std::string> errata;
};

struct FixtureSet {
  std::vector<BiellipticDatum> data;  // sorted by level

  const BiellipticDatum* find(int64_t level) const;
  const WeierstrassCurve* find_curve(const std::string& label) const;
  std::vector<int64_t> levels() const;
};

// Loads and cross-validates table1.json..table6.json from a directory.
FixtureSet load_fixtures(const std::string& dir);

// Resolution order: explicit path, X0EQ_FIXTURES, ./fixtures, ../fixtures.
std::string locate_fixtures(const std::string& explicit_path = "");

}  // namespace x0eq
