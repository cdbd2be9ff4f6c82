#include "x0eq/modcurve.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace x0eq {

std::string Cusp::str() const {
  std::ostringstream os;
  os << "[c=" << denominator;
  if (numerator_class > 0) os << "," << numerator_class;
  os << "]";
  return os.str();
}

bool cusps_equivalent(int64_t N, int64_t p1, int64_t q1, int64_t p2,
                      int64_t q2) {
  // Normalize: infinity -> 1/N, negative denominators flipped.
  auto norm = [N](int64_t& p, int64_t& q) {
    if (q == 0) {
      p = 1;
      q = N;
      return;
    }
    if (q < 0) {
      p = -p;
      q = -q;
    }
  };
  norm(p1, q1);
  norm(p2, q2);
  if (gcd_ll(p1, q1) != 1 || gcd_ll(p2, q2) != 1)
    throw std::domain_error("cusps_equivalent: fractions must be reduced");
  if (gcd_ll(q1, N) != gcd_ll(q2, N)) return false;
  int64_t s1 = (q1 == 1) ? 0 : mod_inverse(p1, q1);
  int64_t s2 = (q2 == 1) ? 0 : mod_inverse(p2, q2);
  int64_t g = gcd_ll(q1 * q2, N);
  return mod_reduce(s1 * q2 - s2 * q1, g) == 0;
}

Cusp reduce_cusp(int64_t N, int64_t p, int64_t q) {
  if (q == 0) {
    p = 1;
    q = N;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (gcd_ll(p, q) != 1)
    throw std::domain_error("reduce_cusp: fraction must be reduced");
  int64_t c = gcd_ll(q, N);
  int64_t g = gcd_ll(c, N / c);
  if (g == 1) return Cusp{c, 0};
  for (int64_t rho = 1; rho < g; ++rho) {
    if (gcd_ll(rho, g) != 1) continue;
    auto [a, cc] = cusp_representative(N, Cusp{c, rho});
    if (cusps_equivalent(N, p, q, a, cc)) return Cusp{c, rho};
  }
  throw std::logic_error("reduce_cusp: no canonical class matched");
}

std::pair<int64_t, int64_t> cusp_representative(int64_t N, const Cusp& c) {
  int64_t g = gcd_ll(c.denominator, N / c.denominator);
  // Lift the residue class mod g to a numerator coprime to the denominator.
  int64_t a = (g == 1) ? 1 : c.numerator_class;
  int64_t guard = 0;
  while (gcd_ll(a, c.denominator) != 1) {
    a += g;
    if (++guard > 4 * c.denominator + 8)
      throw std::logic_error("cusp_representative: no coprime lift found");
  }
  return {a, c.denominator};
}

std::vector<Cusp> cusps(int64_t N) {
  std::vector<Cusp> out;
  for (int64_t c : divisors(N)) {
    int64_t g = gcd_ll(c, N / c);
    if (g == 1) {
      out.push_back(Cusp{c, 0});
      continue;
    }
    for (int64_t rho = 1; rho < g; ++rho)
      if (gcd_ll(rho, g) == 1) out.push_back(Cusp{c, rho});
  }
  return out;
}

Cusp cusp_infinity(int64_t N) { return reduce_cusp(N, 1, N); }

int64_t cusp_width(int64_t N, const Cusp& c) {
  if (c.denominator < 1 || N % c.denominator != 0)
    throw std::domain_error("cusp_width: invalid denominator");
  return N / gcd_ll(c.denominator * c.denominator, N);
}

Rat CuspDivisor::multiplicity(const Cusp& c) const {
  auto it = entries.find(c);
  return it == entries.end() ? Rat(0) : it->second;
}

Rat CuspDivisor::degree() const {
  Rat d(0);
  for (auto& [c, m] : entries) d += m;
  return d;
}

bool CuspDivisor::is_integral() const {
  for (auto& [c, m] : entries)
    if (m.get_den() != 1) return false;
  return true;
}

bool CuspDivisor::is_zero() const {
  for (auto& [c, m] : entries)
    if (m != 0) return false;
  return true;
}

CuspDivisor CuspDivisor::operator+(const CuspDivisor& o) const {
  CuspDivisor out = *this;
  for (auto& [c, m] : o.entries) out.entries[c] += m;
  return out;
}

CuspDivisor CuspDivisor::operator-() const {
  CuspDivisor out;
  for (auto& [c, m] : entries) out.entries[c] = -m;
  return out;
}

bool CuspDivisor::operator==(const CuspDivisor& o) const {
  for (auto& [c, m] : entries)
    if (m != o.multiplicity(c)) return false;
  for (auto& [c, m] : o.entries)
    if (m != multiplicity(c)) return false;
  return true;
}

std::string CuspDivisor::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [c, m] : entries) {
    if (m == 0) continue;
    if (!first) os << " + ";
    os << m << "*" << c.str();
    first = false;
  }
  return first ? "0" : os.str();
}

CuspDivisor eta_divisor(const EtaQuotient& e) {
  if (!is_modular_function(e))
    throw std::domain_error(
        "eta_divisor: exponent vector is not a modular function on "
        "Gamma_0(" +
        std::to_string(e.level) + ")");
  int64_t N = e.level;
  CuspDivisor div;
  for (const Cusp& cusp : cusps(N)) {
    int64_t c = cusp.denominator;
    Rat acc(0);
    for (auto [d, rd] : e.exponents) {
      int64_t gc = gcd_ll(c, d);
      acc += Rat(rd * gc * gc, d);
    }
    Rat order = Rat(N, 24 * gcd_ll(c, N / c) * c) * acc;
    order.canonicalize();
    div.entries[cusp] = order;
  }
  if (div.degree() != 0 || !div.is_integral())
    throw std::domain_error(
        "eta_divisor: non-integral multiplicity or nonzero degree for " +
        e.str());
  return div;
}

Cusp atkin_lehner_on_cusps(int64_t N, int64_t Q, const Cusp& c) {
  if (!is_exact_divisor(Q, N))
    throw std::domain_error("atkin_lehner_on_cusps: Q must be an exact "
                            "divisor of N");
  if (Q == 1) return c;
  int64_t s, t;
  ext_gcd(Q, N / Q, s, t);  // Q*s + (N/Q)*t = 1
  auto [a, den] = cusp_representative(N, c);
  // [[Q, t], [-N, Q*s]] has determinant Q and normalizes Gamma_0(N).
  int64_t p2 = Q * a + t * den;
  int64_t q2 = -N * a + Q * s * den;
  int64_t g = gcd_ll(p2, q2);
  if (g == 0) throw std::logic_error("atkin_lehner_on_cusps: zero image");
  return reduce_cusp(N, p2 / g, q2 / g);
}

CuspDivisor pullback_divisor(int64_t N, int64_t Q, const CuspDivisor& D) {
  CuspDivisor out;
  for (auto& [c, m] : D.entries)
    out.entries[atkin_lehner_on_cusps(N, Q, c)] += m;
  return out;
}

int64_t certification_bound(int64_t N,
                            const std::map<Cusp, int64_t>& poles) {
  int64_t total = 0;
  for (auto& [c, m] : poles) {
    if (m < 0)
      throw std::domain_error("certification_bound: pole orders must be >= 0");
    if (c.denominator < 1 || N % c.denominator != 0)
      throw std::domain_error("certification_bound: cusp not on X_0(N)");
    total += m;
  }
  return total;
}

int64_t psl2_index(int64_t N) {
  int64_t idx = N;
  for (auto [p, e] : factorize(N)) idx += idx / p;
  return idx;
}

int64_t elliptic_points_order2(int64_t N) {
  if (N % 4 == 0) return 0;
  int64_t nu = 1;
  for (auto [p, e] : factorize(N)) {
    if (p == 2) continue;
    nu *= 1 + ((p % 4 == 1) ? 1 : -1);
  }
  return nu;
}

int64_t elliptic_points_order3(int64_t N) {
  if (N % 9 == 0) return 0;
  int64_t nu = 1;
  for (auto [p, e] : factorize(N)) {
    if (p == 3) continue;
    nu *= 1 + ((p % 3 == 1) ? 1 : -1);
  }
  return nu;
}

int64_t genus_x0(int64_t N) {
  if (N < 1) throw std::domain_error("genus_x0: N must be positive");
  int64_t mu = psl2_index(N);
  int64_t nu2 = elliptic_points_order2(N);
  int64_t nu3 = elliptic_points_order3(N);
  int64_t ncusps = static_cast<int64_t>(cusps(N).size());
  // 12g = 12 + mu - 3*nu2 - 4*nu3 - 6*ncusps
  int64_t twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * ncusps;
  if (twelve_g % 12 != 0)
    throw std::logic_error("genus_x0: formula did not produce an integer");
  return twelve_g / 12;
}

}  // namespace x0eq
