#pragma once

#include <optional>

#include "x0eq/fixtures.hpp"

namespace x0eq {

struct DeriveOptions {
  long precision_override = 0;  // 0 = automatic from the certification bound
  bool run_complement = true;   // joint solve for a on Atkin-Lehner levels
};

struct DeriveReport {
  int64_t level = 0;
  ModelPolynomial derived;
  bool matches_expected = false;

  // Rigor data: the identity residual vanishes for all exponents through
  // verified_through, which exceeds the certification bound, so the identity
  // holds exactly on the curve.
  int64_t cert_bound = 0;
  long verified_through = 0;
  bool certified = false;

  long precision_used = 0;
  int64_t minus_ord_u = 0;  // pole order of the leading eta term at infinity
  long deg_p1 = -1, deg_p2 = -1;

  // Structural claims; the S2 level 72 is outside their scope.
  bool structural_in_scope = true;
  bool deg1_matches_pole = false;
  bool deg2_bounded = false;

  bool identities_ok = false;     // both parametrization identities
  bool p_integral = false;
  // Observed prime support of the x, y coefficient denominators.
  std::string denominator_primes;

  // Atkin-Lehner extras
  bool divisor_pullback_ok = false;  // div(term2) = w^*(div(term1))
  std::optional<Rat> complement_a;

  std::vector<std::string> errata;
  double seconds = 0.0;
};

DeriveReport derive_equation(const BiellipticDatum& datum,
                             const DeriveOptions& opts = {});

struct SearchReport {
  int64_t level = 0;
  SearchResult search;
  EtaQuotient table_u;
  int64_t table_pole_order = 0;
  bool pole_order_matches = false;
  EtaQuotient v;
  Rat a;
  double seconds = 0.0;
};

// Runs search_u for an Atkin-Lehner level and compares with the table entry.
SearchReport run_search(const BiellipticDatum& datum);

// The cusp w(infinity), used for the certification pole bound.
Cusp involution_image_of_infinity(int64_t level, const Involution& w);

}  // namespace x0eq
