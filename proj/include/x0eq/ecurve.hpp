#pragma once

#include <array>
#include <string>
#include <vector>

#include "x0eq/qseries.hpp"

namespace x0eq {

// Integral Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// with its conductor and Cremona-style label. Models are taken as globally
// minimal; the bad-reduction rules for a_p key off the stored conductor.
struct WeierstrassCurve {
  int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  int64_t conductor = 0;
  std::string label;

  struct Invariants {
    Int b2, b4, b6, b8, c4, c6, disc;
  };
  Invariants invariants() const;  // throws if disc == 0
  Int discriminant() const { return invariants().disc; }

  // Left side minus right side of the model, as a polynomial identity check:
  // F(x, y) = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6.
  QSeries weierstrass_residual(const QSeries& x, const QSeries& y) const;

  std::string equation_str() const;
};

// #E(F_p) by full enumeration of (x, y) in F_p^2 plus the point at infinity.
// Counts points of the reduced (possibly singular) cubic.
int64_t count_points_naive(const WeierstrassCurve& E, int64_t p);
// Same count via completed square and Legendre sums for odd p.
int64_t count_points_fast(const WeierstrassCurve& E, int64_t p);

// Trace of Frobenius at a good prime, a_p = p + 1 - #E(F_p); at bad primes
// 0 / +1 / -1 for additive / split / non-split multiplicative reduction,
// decided by whether the tangent slopes at the node lie in F_p.
// A prime dividing the discriminant but not the conductor is reported as a
// fixture inconsistency.
int64_t trace_of_frobenius(const WeierstrassCurve& E, int64_t p);

// a_1..a_n of the L-series / newform via the Hecke recursion:
// a_{mn} = a_m a_n for coprime m,n; a_{p^k} = a_p a_{p^{k-1}} - p a_{p^{k-2}}
// at good p; a_{p^k} = a_p^k at bad p.
std::vector<int64_t> an_coefficients(const WeierstrassCurve& E, int64_t n_max);

// Newform q-expansion q + a_2 q^2 + ... + O(q^precision).
QSeries newform_series(const WeierstrassCurve& E, long precision);

// Invariant cusp form recipe h(q) = sum_i c_i * f(q^{l_i}) followed by an
// optional global substitution q -> q^d (used when the parametrization is
// solved at the base level and transported up).
struct HRecipe {
  WeierstrassCurve base_curve;
  std::vector<std::pair<int64_t, int64_t>> terms;  // (coefficient, power)
  int64_t post_substitution = 1;

  void validate(int64_t level) const;  // first term (1,1); powers divide N/M
};

QSeries build_h(const HRecipe& recipe, long precision);

}  // namespace x0eq
