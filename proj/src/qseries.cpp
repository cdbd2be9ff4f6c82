#include "x0eq/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace x0eq {

QSeries::QSeries(long valuation, std::vector<Rat> coeffs, long prec)
    : val_(valuation), prec_(prec), coeffs_(std::move(coeffs)) {
  normalize();
}

void QSeries::normalize() {
  // Drop coefficients at or beyond the precision.
  if (val_ + static_cast<long>(coeffs_.size()) > prec_) {
    long keep = prec_ - val_;
    coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
  }
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QSeries QSeries::zero(long prec) { return QSeries(prec, {}, prec); }

QSeries QSeries::constant(const Rat& c, long prec) {
  return QSeries(0, {c}, prec);
}

QSeries QSeries::monomial(const Rat& c, long n, long prec) {
  return QSeries(n, {c}, prec);
}

Rat QSeries::coefficient(long n) const {
  if (n >= prec_)
    throw std::domain_error("QSeries::coefficient: exponent " +
                            std::to_string(n) + " is beyond precision " +
                            std::to_string(prec_));
  if (is_zero() || n < val_ || n >= val_ + static_cast<long>(coeffs_.size()))
    return Rat(0);
  return coeffs_[static_cast<size_t>(n - val_)];
}

const Rat& QSeries::leading_coefficient() const {
  if (is_zero())
    throw std::domain_error("QSeries::leading_coefficient: zero series");
  return coeffs_.front();
}

QSeries QSeries::truncated(long new_prec) const {
  if (new_prec >= prec_) return *this;
  return QSeries(val_, coeffs_, new_prec);
}

QSeries QSeries::shifted(long k) const {
  return QSeries(val_ + k, coeffs_, prec_ + k);
}

QSeries QSeries::operator-() const {
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return QSeries(val_, std::move(c), prec_);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_, b.prec_);
  long lo = std::min(a.val_, b.val_);
  if (lo >= prec) return QSeries::zero(prec);
  std::vector<Rat> c(static_cast<size_t>(prec - lo), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    long e = a.val_ + static_cast<long>(i);
    if (e < prec) c[static_cast<size_t>(e - lo)] += a.coeffs_[i];
  }
  for (size_t i = 0; i < b.coeffs_.size(); ++i) {
    long e = b.val_ + static_cast<long>(i);
    if (e < prec) c[static_cast<size_t>(e - lo)] += b.coeffs_[i];
  }
  return QSeries(lo, std::move(c), prec);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  // For a zero operand the stored valuation equals the precision, which is
  // exactly the right pessimistic valuation for the precision formula.
  long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
  long lo = a.val_ + b.val_;
  long len = prec - lo;
  if (len <= 0) return QSeries::zero(prec);
  std::vector<Rat> c(static_cast<size_t>(len), Rat(0));
  size_t na = std::min(a.coeffs_.size(), static_cast<size_t>(len));
  for (size_t i = 0; i < na; ++i) {
    if (a.coeffs_[i] == 0) continue;
    size_t nb = std::min(b.coeffs_.size(), static_cast<size_t>(len) - i);
    for (size_t j = 0; j < nb; ++j) {
      if (b.coeffs_[j] == 0) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QSeries(lo, std::move(c), prec);
}

QSeries operator*(const Rat& s, const QSeries& a) {
  if (s == 0) return QSeries::zero(a.prec_);
  std::vector<Rat> c(a.coeffs_.size());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = s * a.coeffs_[i];
  return QSeries(a.val_, std::move(c), a.prec_);
}

QSeries QSeries::inverse() const {
  if (is_zero())
    throw std::domain_error("QSeries::inverse: series is zero to precision");
  long rel = prec_ - val_;  // number of trusted coefficients
  std::vector<Rat> r(static_cast<size_t>(rel), Rat(0));
  Rat lead_inv = Rat(1) / coeffs_.front();
  r[0] = lead_inv;
  for (long k = 1; k < rel; ++k) {
    Rat acc(0);
    long imax = std::min<long>(k, static_cast<long>(coeffs_.size()) - 1);
    for (long i = 1; i <= imax; ++i) acc += coeffs_[static_cast<size_t>(i)] * r[static_cast<size_t>(k - i)];
    r[static_cast<size_t>(k)] = -acc * lead_inv;
  }
  return QSeries(-val_, std::move(r), prec_ - 2 * val_);
}

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return QSeries::constant(Rat(1));
  QSeries acc = *this;
  QSeries out = QSeries::constant(Rat(1));
  long k = e;
  while (k > 0) {
    if (k & 1) out = out * acc;
    k >>= 1;
    if (k > 0) acc = acc * acc;
  }
  return out;
}

QSeries QSeries::q_derivative() const {
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    c[i] = Rat(val_ + static_cast<long>(i)) * coeffs_[i];
  return QSeries(val_, std::move(c), prec_);
}

QSeries QSeries::substitute_power(long d) const {
  if (d < 1)
    throw std::domain_error("QSeries::substitute_power: d must be >= 1");
  if (d == 1) return *this;
  if (is_zero()) return QSeries::zero(prec_ * d);
  std::vector<Rat> c(coeffs_.size() * static_cast<size_t>(d), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<size_t>(d)] = coeffs_[i];
  return QSeries(val_ * d, std::move(c), prec_ * d);
}

bool QSeries::agrees_with(const QSeries& other) const {
  long prec = std::min(prec_, other.prec_);
  long lo = std::min(val_, other.val_);
  for (long n = lo; n < prec; ++n) {
    Rat x = (n >= val_ && n < val_ + static_cast<long>(coeffs_.size()))
                ? coeffs_[static_cast<size_t>(n - val_)]
                : Rat(0);
    Rat y = (n >= other.val_ &&
             n < other.val_ + static_cast<long>(other.coeffs_.size()))
                ? other.coeffs_[static_cast<size_t>(n - other.val_)]
                : Rat(0);
    if (x != y) return false;
  }
  return true;
}

std::string QSeries::str(long max_terms) const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(q^" << prec_ << ")";
    return os.str();
  }
  long shown = 0;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    long e = val_ + static_cast<long>(i);
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (ac == 1);
    if (e == 0) {
      os << ac;
    } else {
      if (!unit) os << ac << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    ++shown;
  }
  if (prec_ < kExactPrec) os << " + O(q^" << prec_ << ")";
  return os.str();
}

}  // namespace x0eq
