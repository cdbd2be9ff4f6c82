#pragma once

#include <map>
#include <string>

#include "x0eq/qseries.hpp"

namespace x0eq {

// Exponent vector {r_d : d | N} for the quotient prod_{d|N} eta(d z)^{r_d}.
// Zero entries are allowed so that exponent vectors at a fixed level form a
// lattice under addition.
struct EtaQuotient {
  int64_t level = 1;
  std::map<int64_t, int64_t> exponents;  // keys divide level

  EtaQuotient() = default;
  EtaQuotient(int64_t n, std::map<int64_t, int64_t> r);

  int64_t exponent(int64_t d) const;
  int64_t weighted_sum() const;       // sum d * r_d
  int64_t dual_weighted_sum() const;  // sum (N/d) * r_d
  int64_t exponent_sum() const;       // sum r_d

  EtaQuotient operator*(const EtaQuotient& o) const;  // add exponents
  EtaQuotient inverse_quotient() const;               // negate exponents

  // Exponent permutation induced by the Atkin-Lehner involution w_Q:
  // d = d_Q * d_R with d_Q = gcd(d, Q) maps to (Q / d_Q) * d_R. For an exact
  // divisor Q of the level, w_Q^*(this) is a constant times the permuted
  // quotient.
  EtaQuotient atkin_lehner_permuted(int64_t Q) const;

  std::string str() const;  // "1:-2,2:4,17:2,34:-4"
  static EtaQuotient parse(int64_t level, const std::string& s);

  bool operator==(const EtaQuotient& o) const;
};

// prod_{n>=1} (1 - q^n) expanded by the pentagonal-number theorem; all
// coefficients lie in {-1, 0, 1}.
QSeries euler_product(long precision);

// Exact rational (1/24) * sum d * r_d.
Rat order_at_infinity(const EtaQuotient& e);

// The four classical criteria for the quotient to be a modular function on
// Gamma_0(level): weight zero, sum d*r_d = 0 (mod 24), sum (N/d)*r_d = 0
// (mod 24), and prod d^{r_d} a rational square.
bool is_modular_function(const EtaQuotient& e);

// q-expansion q^{sum d r_d / 24} * prod (euler_product o q^d)^{r_d}, trusted
// modulo q^precision. Leading coefficient is 1. Requires the leading exponent
// sum d*r_d / 24 to be an integer.
QSeries eta_quotient_series(const EtaQuotient& e, long precision);

}  // namespace x0eq
