#pragma once

#include <optional>

#include "x0eq/linsolve.hpp"
#include "x0eq/modcurve.hpp"
#include "x0eq/wparam.hpp"

namespace x0eq {

// t = sum_i c_i * (eta quotient)_i at a fixed level; table entries are all
// two-term combinations u - a*v.
struct TSpecTerm {
  Int coefficient;
  EtaQuotient eta;
};

struct TSpec {
  int64_t level = 0;
  std::vector<TSpecTerm> terms;

  void validate() const;  // every term passes is_modular_function
};

QSeries build_t(const TSpec& spec, long precision);

// P(x, y) = P1(x) + P2(x) y with exact rational (in the tables: integer)
// coefficients, constant term first.
struct ModelPolynomial {
  std::vector<Rat> p1, p2;

  long deg1() const;  // -1 when zero
  long deg2() const;
  bool integral() const;
  bool is_monic1() const;
  bool operator==(const ModelPolynomial& o) const;
  std::string str() const;
};

struct ExpressResult {
  ModelPolynomial P;
  long verified_through = 0;  // residual vanishes for all exponents <= this
};

// Expresses t^2 exactly in the monomial basis {x^i : i <= D1} union
// {x^j y : j <= D2}, with D1, D2 read off the pole orders at infinity. The
// basis elements have pairwise distinct valuations, so the exact linear
// system is triangular with unit pivots; the remaining rows through
// q^check_through are verified to vanish. Throws on an inconsistent system.
ExpressResult express_in_xy(const QSeries& t, const ParamPair& pair,
                            long check_through);

struct Complement {
  EtaQuotient v;
  Rat a;
};

// Finds v in the eta-quotient group with div v = w_Q^*(div u) by solving the
// Ligozat order system, then determines the constant a in w_Q^*(u) = a v by
// the joint linear condition that u + a v is a polynomial in x and y.
Complement find_complement(int64_t N, const EtaQuotient& u, int64_t Q,
                           const ParamPair& pair);

struct SearchResult {
  EtaQuotient u;
  int64_t pole_order = 0;              // -ord_infinity(u)
  std::vector<int64_t> refuted;        // pole degrees with no candidate
  int64_t candidates_at_minimum = 0;
};

// Searches for a valid u with minimal pole order: for each target degree
// D = 1, 2, ... it enumerates all candidate cusp-order vectors whose polar
// part is D*(inf) or D*((inf) + (w inf)), inverts the Ligozat order matrix,
// and keeps integral exponent vectors passing the modular-function criteria
// with div w^*(u) != div u. Ties at the minimal D are broken by smallest L1
// norm of the exponent vector, then lexicographic order.
SearchResult search_u(int64_t N, int64_t Q, int64_t d_max = 64);

// Ligozat order matrix at denominator level: entry (i, j) is the order at
// any cusp of denominator c_i of the quotient with a single exponent 1 at
// divisor d_j.
QMatrix eta_order_matrix(int64_t N);

// Orders of div(e) per denominator, in divisors(N) order.
std::vector<Rat> eta_order_vector(const EtaQuotient& e);

}  // namespace x0eq
