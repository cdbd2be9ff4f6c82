#pragma once

#include <map>
#include <string>
#include <vector>

#include "x0eq/eta.hpp"

namespace x0eq {

// Cusp class of X_0(N): denominator c | N together with the numerator residue
// class mod gcd(c, N/c). There are phi(gcd(c, N/c)) classes per denominator
// and the class of ~ (= infinity) has denominator N.
struct Cusp {
  int64_t denominator = 1;
  int64_t numerator_class = 0;  // in [0, gcd(c, N/c)), coprime to it

  auto operator<=>(const Cusp&) const = default;
  std::string str() const;
};

// Gamma_0(N)-equivalence of fractions p1/q1, p2/q2 (q = 0 encodes infinity):
// equivalent iff gcd(q1,N) = gcd(q2,N) and s1*q2 = s2*q1 mod gcd(q1*q2, N),
// where s_i is an inverse of p_i mod q_i.
bool cusps_equivalent(int64_t N, int64_t p1, int64_t q1, int64_t p2,
                      int64_t q2);

// Canonical class of the cusp p/q (gcd(p,q)=1; q=0 encodes infinity).
Cusp reduce_cusp(int64_t N, int64_t p, int64_t q);

// A fraction a/c representing the class, with c = denominator exactly.
std::pair<int64_t, int64_t> cusp_representative(int64_t N, const Cusp& c);

// Complete, duplicate-free list; size sum_{c|N} phi(gcd(c, N/c)).
std::vector<Cusp> cusps(int64_t N);

Cusp cusp_infinity(int64_t N);
// Width N / gcd(c^2, N): the local parameter at the cusp is q^{1/width}.
int64_t cusp_width(int64_t N, const Cusp& c);

// Formal combination of cusp classes. Multiplicities are exact rationals
// internally; genuine function divisors are integral, asserted at the
// boundary.
struct CuspDivisor {
  std::map<Cusp, Rat> entries;

  Rat multiplicity(const Cusp& c) const;
  Rat degree() const;
  bool is_integral() const;
  bool is_zero() const;
  CuspDivisor operator+(const CuspDivisor& o) const;
  CuspDivisor operator-() const;
  bool operator==(const CuspDivisor& o) const;
  std::string str() const;
};

// Divisor of an eta quotient by the Ligozat order formula: the order at a
// cusp with denominator c is
//   N / (24 * gcd(c, N/c) * c) * sum_d r_d * gcd(c,d)^2 / d.
// Requires is_modular_function(e); the result has degree 0 and integral
// multiplicities (checked).
CuspDivisor eta_divisor(const EtaQuotient& e);

// Action of the Atkin-Lehner involution w_Q on cusp classes, computed by the
// explicit matrix [[Q, t], [-N, Q*s]] of determinant Q (Q*s + (N/Q)*t = 1)
// followed by reduction. Q must be an exact divisor of N.
Cusp atkin_lehner_on_cusps(int64_t N, int64_t Q, const Cusp& c);

// Image divisor under w_Q; for an involution pushforward and pullback agree.
CuspDivisor pullback_divisor(int64_t N, int64_t Q, const CuspDivisor& D);

// Total degree D of a nonnegative pole divisor: a modular function on X_0(N)
// with poles bounded by it and q-expansion O(q^{D+1}) is identically zero.
int64_t certification_bound(int64_t N, const std::map<Cusp, int64_t>& poles);

// Index [PSL_2(Z) : Gamma-bar_0(N)] = N * prod_{p|N} (1 + 1/p).
int64_t psl2_index(int64_t N);
// Counts of elliptic points of order 2 and 3 on X_0(N).
int64_t elliptic_points_order2(int64_t N);
int64_t elliptic_points_order3(int64_t N);
int64_t genus_x0(int64_t N);

}  // namespace x0eq
