#include "x0eq/eta.hpp"

#include <sstream>
#include <stdexcept>

namespace x0eq {

EtaQuotient::EtaQuotient(int64_t n, std::map<int64_t, int64_t> r)
    : level(n), exponents(std::move(r)) {
  if (n < 1) throw std::domain_error("EtaQuotient: level must be positive");
  for (auto [d, rd] : exponents)
    if (d < 1 || n % d != 0)
      throw std::domain_error("EtaQuotient: exponent key " +
                              std::to_string(d) + " does not divide level " +
                              std::to_string(n));
}

int64_t EtaQuotient::exponent(int64_t d) const {
  auto it = exponents.find(d);
  return it == exponents.end() ? 0 : it->second;
}

int64_t EtaQuotient::weighted_sum() const {
  int64_t s = 0;
  for (auto [d, rd] : exponents) s += d * rd;
  return s;
}

int64_t EtaQuotient::dual_weighted_sum() const {
  int64_t s = 0;
  for (auto [d, rd] : exponents) s += (level / d) * rd;
  return s;
}

int64_t EtaQuotient::exponent_sum() const {
  int64_t s = 0;
  for (auto [d, rd] : exponents) s += rd;
  return s;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const {
  if (level != o.level)
    throw std::domain_error("EtaQuotient: mismatched levels");
  std::map<int64_t, int64_t> r = exponents;
  for (auto [d, rd] : o.exponents) r[d] += rd;
  return EtaQuotient(level, std::move(r));
}

EtaQuotient EtaQuotient::inverse_quotient() const {
  std::map<int64_t, int64_t> r;
  for (auto [d, rd] : exponents) r[d] = -rd;
  return EtaQuotient(level, std::move(r));
}

EtaQuotient EtaQuotient::atkin_lehner_permuted(int64_t Q) const {
  if (!is_exact_divisor(Q, level))
    throw std::domain_error("atkin_lehner_permuted: Q is not an exact divisor");
  std::map<int64_t, int64_t> r;
  for (auto [d, rd] : exponents) {
    int64_t dq = gcd_ll(d, Q);
    r[(Q / dq) * (d / dq)] += rd;
  }
  return EtaQuotient(level, std::move(r));
}

std::string EtaQuotient::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [d, rd] : exponents) {
    if (rd == 0) continue;
    if (!first) os << ",";
    os << d << ":" << rd;
    first = false;
  }
  return first ? "1" : os.str();
}

EtaQuotient EtaQuotient::parse(int64_t level, const std::string& s) {
  std::map<int64_t, int64_t> r;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("EtaQuotient::parse: expected d:r pairs");
    r[std::stoll(item.substr(0, colon))] += std::stoll(item.substr(colon + 1));
  }
  return EtaQuotient(level, std::move(r));
}

bool EtaQuotient::operator==(const EtaQuotient& o) const {
  if (level != o.level) return false;
  for (auto d : divisors(level))
    if (exponent(d) != o.exponent(d)) return false;
  return true;
}

QSeries euler_product(long precision) {
  if (precision < 1)
    throw std::domain_error("euler_product: precision must be >= 1");
  std::vector<Rat> c(static_cast<size_t>(precision), Rat(0));
  c[0] = 1;
  // Generalized pentagonal exponents k(3k -+ 1)/2 with sign (-1)^k.
  for (int64_t k = 1;; ++k) {
    int64_t g1 = k * (3 * k - 1) / 2;
    int64_t g2 = k * (3 * k + 1) / 2;
    if (g1 >= precision) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<size_t>(g1)] += sign;
    if (g2 < precision) c[static_cast<size_t>(g2)] += sign;
  }
  return QSeries(0, std::move(c), precision);
}

Rat order_at_infinity(const EtaQuotient& e) {
  Rat r(e.weighted_sum(), 24);
  r.canonicalize();
  return r;
}

bool is_modular_function(const EtaQuotient& e) {
  if (e.exponent_sum() != 0) return false;
  if (mod_reduce(e.weighted_sum(), 24) != 0) return false;
  if (mod_reduce(e.dual_weighted_sum(), 24) != 0) return false;
  // prod d^{r_d} is a rational square iff every prime occurs with even total
  // exponent; divisors of the level are tiny, so trial factorization does.
  std::map<int64_t, int64_t> primes;
  for (auto [d, rd] : e.exponents)
    for (auto [p, k] : factorize(d)) primes[p] += int64_t(k) * rd;
  for (auto [p, k] : primes)
    if (k % 2 != 0) return false;
  return true;
}

QSeries eta_quotient_series(const EtaQuotient& e, long precision) {
  int64_t w = e.weighted_sum();
  if (mod_reduce(w, 24) != 0)
    throw std::domain_error(
        "eta_quotient_series: leading exponent sum(d*r_d)/24 = " +
        std::to_string(w) + "/24 is not an integer");
  long val = static_cast<long>(w / 24);
  long rel = precision - val;  // relative terms needed past the leading one
  if (rel < 1) return QSeries::zero(precision);
  QSeries acc = QSeries::constant(Rat(1), rel);
  for (auto [d, rd] : e.exponents) {
    if (rd == 0) continue;
    long need = (rel + d - 1) / d;
    QSeries f = euler_product(need).substitute_power(d).truncated(rel);
    acc = acc * f.pow(rd);
    acc = acc.truncated(rel);
  }
  return acc.shifted(val);
}

}  // namespace x0eq
