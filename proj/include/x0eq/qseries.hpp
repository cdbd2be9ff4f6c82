#pragma once

#include <string>
#include <vector>

#include "x0eq/numutil.hpp"

namespace x0eq {

// Truncated Laurent series in q with exact rational coefficients.
//
// A series is trusted modulo q^prec: coefficients of q^n for n < prec are
// exact, nothing is known beyond. Every operation computes the honest output
// precision; precision never silently inflates. Representation is normalized:
// the stored leading coefficient is nonzero unless the series is zero up to
// its precision, in which case the coefficient vector is empty and
// valuation() == precision().
//
// Values are immutable after construction and safe to share across threads.
class QSeries {
 public:
  // Precision tag for series known exactly at every order (constants built
  // from rationals). Large enough that no honest computation reaches it,
  // small enough that precision arithmetic cannot overflow a long.
  static constexpr long kExactPrec = 1L << 40;

  QSeries() : val_(0), prec_(0) {}  // zero series known to no precision
  QSeries(long valuation, std::vector<Rat> coeffs, long prec);

  static QSeries zero(long prec);
  static QSeries constant(const Rat& c, long prec = kExactPrec);
  // c * q^n + O(q^prec)
  static QSeries monomial(const Rat& c, long n, long prec = kExactPrec);

  bool is_zero() const { return coeffs_.empty(); }
  // For the zero series the valuation is reported as the precision: all that
  // is known is that the series is O(q^prec).
  long valuation() const { return val_; }
  long precision() const { return prec_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Exact coefficient of q^n; zero below the valuation. Asking at or beyond
  // the precision is an out-of-precision error, never a silent zero.
  Rat coefficient(long n) const;
  const Rat& leading_coefficient() const;

  QSeries truncated(long new_prec) const;
  QSeries shifted(long k) const;  // multiply by q^k

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& c, const QSeries& a);

  // Multiplicative inverse; requires a series that is nonzero up to its
  // precision. Result has valuation -val and precision prec - 2*val.
  QSeries inverse() const;
  QSeries pow(long e) const;

  // q d/dq: termwise n * c_n, precision preserved.
  QSeries q_derivative() const;

  // q -> q^d, d >= 1. Valuation and precision scale by d.
  QSeries substitute_power(long d) const;

  // Equality of all coefficients up to the smaller precision.
  bool agrees_with(const QSeries& other) const;

  // First exponent n with nonzero coefficient, or precision() if none.
  long order_of_vanishing() const { return is_zero() ? prec_ : val_; }

  std::string str(long max_terms = 12) const;

 private:
  void normalize();

  long val_;
  long prec_;
  std::vector<Rat> coeffs_;  // exponents val_ .. val_ + size - 1
};

}  // namespace x0eq
