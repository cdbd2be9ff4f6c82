#include "x0eq/relation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace x0eq {

void TSpec::validate() const {
  if (level < 1) throw std::domain_error("TSpec: invalid level");
  for (const auto& term : terms) {
    if (term.eta.level != level)
      throw std::domain_error("TSpec: term level mismatch");
    if (!is_modular_function(term.eta))
      throw std::domain_error("TSpec: term " + term.eta.str() +
                              " is not a modular function at level " +
                              std::to_string(level));
  }
}

QSeries build_t(const TSpec& spec, long precision) {
  spec.validate();
  QSeries t = QSeries::zero(precision);
  for (const auto& term : spec.terms) {
    if (term.coefficient == 0) continue;
    t = t + Rat(term.coefficient) * eta_quotient_series(term.eta, precision);
  }
  return t;
}

long ModelPolynomial::deg1() const {
  for (size_t i = p1.size(); i-- > 0;)
    if (p1[i] != 0) return static_cast<long>(i);
  return -1;
}

long ModelPolynomial::deg2() const {
  for (size_t i = p2.size(); i-- > 0;)
    if (p2[i] != 0) return static_cast<long>(i);
  return -1;
}

bool ModelPolynomial::integral() const {
  for (const Rat& c : p1)
    if (c.get_den() != 1) return false;
  for (const Rat& c : p2)
    if (c.get_den() != 1) return false;
  return true;
}

bool ModelPolynomial::is_monic1() const {
  long d = deg1();
  return d >= 0 && p1[static_cast<size_t>(d)] == 1;
}

bool ModelPolynomial::operator==(const ModelPolynomial& o) const {
  auto coeff = [](const std::vector<Rat>& v, size_t i) {
    return i < v.size() ? v[i] : Rat(0);
  };
  size_t n1 = std::max(p1.size(), o.p1.size());
  size_t n2 = std::max(p2.size(), o.p2.size());
  for (size_t i = 0; i < n1; ++i)
    if (coeff(p1, i) != coeff(o.p1, i)) return false;
  for (size_t i = 0; i < n2; ++i)
    if (coeff(p2, i) != coeff(o.p2, i)) return false;
  return true;
}

namespace {

std::string poly_str(const std::vector<Rat>& p) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat ac = c < 0 ? Rat(-c) : c;
    if (i == 0 || ac != 1) os << ac;
    if (i > 0) {
      if (ac != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string ModelPolynomial::str() const {
  std::string s = poly_str(p1);
  if (deg2() >= 0) s += " + (" + poly_str(p2) + ")*y";
  return s;
}

ExpressResult express_in_xy(const QSeries& t, const ParamPair& pair,
                            long check_through) {
  QSeries t2 = t * t;
  if (t2.is_zero()) {
    if (t2.precision() <= check_through)
      throw std::domain_error("express_in_xy: precision below the bound");
    return ExpressResult{ModelPolynomial{}, check_through};
  }
  const long ex = -pair.x.valuation();
  const long ey = -pair.y.valuation();
  const long m = -t2.valuation();
  if (m <= 0)
    throw std::domain_error("express_in_xy: t^2 must have a pole at infinity");
  const long d1 = m / ex;
  const long d2 = (m - ey) >= 0 ? (m - ey) / ex : -1;

  // Monomial basis ordered by pole order at infinity descending; valuations
  // are pairwise distinct, so each coefficient is peeled off the residual at
  // its own leading exponent (forward substitution with unit pivots).
  struct Column {
    long val;
    bool with_y;
    long k;
    QSeries series;
  };
  std::vector<Column> cols;
  {
    std::vector<QSeries> xpow;
    xpow.push_back(QSeries::constant(Rat(1)));
    for (long i = 1; i <= d1; ++i) xpow.push_back(xpow.back() * pair.x);
    for (long i = 0; i <= d1; ++i)
      cols.push_back(Column{-ex * i, false, i, xpow[static_cast<size_t>(i)]});
    for (long j = 0; j <= d2; ++j)
      cols.push_back(
          Column{-ex * j - ey, true, j, xpow[static_cast<size_t>(j)] * pair.y});
    std::sort(cols.begin(), cols.end(),
              [](const Column& a, const Column& b) { return a.val < b.val; });
  }

  ModelPolynomial P;
  P.p1.assign(static_cast<size_t>(d1) + 1, Rat(0));
  P.p2.assign(static_cast<size_t>(d2 >= 0 ? d2 + 1 : 0), Rat(0));
  QSeries residual = t2;
  for (const Column& col : cols) {
    if (residual.is_zero() || residual.valuation() > col.val) continue;
    Rat c = residual.coefficient(col.val) / col.series.leading_coefficient();
    if (c == 0) continue;
    residual = residual - c * col.series;
    if (col.with_y)
      P.p2[static_cast<size_t>(col.k)] = c;
    else
      P.p1[static_cast<size_t>(col.k)] = c;
  }
  if (!residual.is_zero()) {
    long bad = residual.valuation();
    if (bad <= check_through)
      throw std::domain_error(
          "express_in_xy: inconsistent system, residual at q^" +
          std::to_string(bad));
  }
  if (residual.precision() <= check_through)
    throw std::domain_error(
        "express_in_xy: residual precision " +
        std::to_string(residual.precision()) +
        " does not reach the certification bound " +
        std::to_string(check_through));
  return ExpressResult{P, check_through};
}

QMatrix eta_order_matrix(int64_t N) {
  auto divs = divisors(N);
  const size_t n = divs.size();
  QMatrix M(n, n);
  for (size_t i = 0; i < n; ++i) {
    int64_t c = divs[i];
    Rat pref(N, 24 * gcd_ll(c, N / c) * c);
    for (size_t j = 0; j < n; ++j) {
      int64_t d = divs[j];
      int64_t g = gcd_ll(c, d);
      M.at(i, j) = pref * Rat(g * g, d);
      M.at(i, j).canonicalize();
    }
  }
  return M;
}

std::vector<Rat> eta_order_vector(const EtaQuotient& e) {
  auto divs = divisors(e.level);
  std::vector<Rat> r(divs.size(), Rat(0));
  for (size_t j = 0; j < divs.size(); ++j) r[j] = Rat(e.exponent(divs[j]));
  return mat_vec(eta_order_matrix(e.level), r);
}

namespace {

// Exponent lattice membership tests that are not captured by integrality of
// the order vector: weight zero and the rational-square condition.
bool passes_extra_criteria(const EtaQuotient& e) {
  return e.exponent_sum() == 0 && is_modular_function(e);
}

EtaQuotient quotient_from_vector(int64_t N, const std::vector<int64_t>& divs,
                                 const std::vector<Rat>& r) {
  std::map<int64_t, int64_t> exps;
  for (size_t j = 0; j < divs.size(); ++j) {
    if (r[j].get_den() != 1)
      throw std::domain_error("quotient_from_vector: non-integral exponent");
    int64_t v = static_cast<int64_t>(r[j].get_num().get_si());
    if (v != 0) exps[divs[j]] = v;
  }
  return EtaQuotient(N, std::move(exps));
}

}  // namespace

Complement find_complement(int64_t N, const EtaQuotient& u, int64_t Q,
                           const ParamPair& pair) {
  if (!is_exact_divisor(Q, N))
    throw std::domain_error("find_complement: Q must be an exact divisor");
  if (!is_modular_function(u))
    throw std::domain_error("find_complement: u fails the eta criteria");
  auto divs = divisors(N);
  const size_t n = divs.size();
  std::vector<Rat> ord_u = eta_order_vector(u);

  // Target orders: permute the denominator classes by w_Q.
  std::vector<Rat> target(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    int64_t c = divs[i];
    int64_t cq = gcd_ll(c, Q);
    int64_t image = (Q / cq) * (c / cq);
    size_t k = static_cast<size_t>(
        std::lower_bound(divs.begin(), divs.end(), image) - divs.begin());
    target[k] = ord_u[i];
  }
  if (target == ord_u)
    throw std::domain_error(
        "find_complement: div w^*(u) = div u, no complement exists");

  QMatrix Minv = invert_exact(eta_order_matrix(N));
  std::vector<Rat> rv = mat_vec(Minv, target);
  EtaQuotient v = quotient_from_vector(N, divs, rv);
  if (!passes_extra_criteria(v))
    throw std::domain_error(
        "find_complement: no eta quotient realizes the pulled-back divisor");

  // Joint solve for a and the polynomial coefficients of u + a v in x, y.
  QSeries su = eta_quotient_series(u, pair.y.precision());
  QSeries sv = eta_quotient_series(v, pair.y.precision());
  const long ex = -pair.x.valuation();
  const long ey = -pair.y.valuation();
  long pole = std::max({-su.valuation(), -sv.valuation(), int64_t(0)});
  long d1 = pole / ex;
  long d2 = (pole - ey) >= 0 ? (pole - ey) / ex : -1;

  std::vector<QSeries> basis;
  basis.push_back(sv);  // unknown a
  {
    QSeries xp = QSeries::constant(Rat(1));
    for (long i = 0; i <= d1; ++i) {
      basis.push_back(-xp);
      if (i < d1) xp = xp * pair.x;
    }
    QSeries xjy = pair.y;
    for (long j = 0; j <= d2; ++j) {
      basis.push_back(-xjy);
      if (j < d2) xjy = xjy * pair.x;
    }
  }
  long lo = -pole;
  long hi = su.precision();
  for (const QSeries& s : basis) hi = std::min(hi, s.precision());
  if (hi - lo < static_cast<long>(basis.size()) + 8)
    throw std::domain_error("find_complement: not enough precision for the "
                            "joint solve");
  QMatrix A(static_cast<size_t>(hi - lo), basis.size());
  std::vector<Rat> b(static_cast<size_t>(hi - lo), Rat(0));
  for (long e = lo; e < hi; ++e) {
    size_t r = static_cast<size_t>(e - lo);
    for (size_t c = 0; c < basis.size(); ++c) A.at(r, c) = basis[c].coefficient(e);
    b[r] = -su.coefficient(e);
  }
  std::vector<Rat> sol;
  SolveStatus st = solve_exact(std::move(A), std::move(b), sol);
  if (st != SolveStatus::kUnique)
    throw std::domain_error(
        st == SolveStatus::kInconsistent
            ? "find_complement: joint system inconsistent"
            : "find_complement: joint system underdetermined");
  if (sol[0] == 0)
    throw std::domain_error("find_complement: degenerate constant a = 0");
  return Complement{v, sol[0]};
}

SearchResult search_u(int64_t N, int64_t Q, int64_t d_max) {
  if (!is_exact_divisor(Q, N) || Q == 1)
    throw std::domain_error("search_u: Q must be a nontrivial exact divisor");
  auto divs = divisors(N);
  const size_t n = divs.size();
  std::vector<int64_t> phi_c(n);
  for (size_t i = 0; i < n; ++i)
    phi_c[i] = euler_phi(gcd_ll(divs[i], N / divs[i]));
  auto index_of = [&](int64_t d) {
    return static_cast<size_t>(
        std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
  };
  const size_t inf = index_of(N);
  const size_t winf = index_of(N / Q);  // image of infinity under w_Q
  std::vector<size_t> sigma(n);
  for (size_t i = 0; i < n; ++i) {
    int64_t cq = gcd_ll(divs[i], Q);
    sigma[i] = index_of((Q / cq) * (divs[i] / cq));
  }
  QMatrix Minv = invert_exact(eta_order_matrix(N));

  std::vector<EtaQuotient> found;
  SearchResult result;
  for (int64_t D = 1; D <= d_max && found.empty(); ++D) {
    // Polar patterns: D*(inf), and D*((inf) + (w inf)) when w moves infinity.
    for (int pattern = 0; pattern < 2; ++pattern) {
      if (pattern == 1 && winf == inf) continue;
      std::vector<size_t> free_slots;
      for (size_t i = 0; i < n; ++i)
        if (i != inf && !(pattern == 1 && i == winf)) free_slots.push_back(i);
      int64_t need = D + (pattern == 1 ? D * phi_c[winf] : 0);

      std::vector<Rat> orders(n, Rat(0));
      orders[inf] = -D;
      if (pattern == 1) orders[winf] = -D;
      // Enumerate nonnegative zero orders with phi-weighted degree `need`.
      std::vector<int64_t> o(free_slots.size(), 0);
      auto emit = [&]() {
        for (size_t k = 0; k < free_slots.size(); ++k)
          orders[free_slots[k]] = Rat(o[k]);
        // div w^*(u) != div u
        bool moved = false;
        for (size_t i = 0; i < n; ++i)
          if (orders[sigma[i]] != orders[i]) {
            moved = true;
            break;
          }
        if (!moved) return;
        std::vector<Rat> r = mat_vec(Minv, orders);
        for (const Rat& ri : r)
          if (ri.get_den() != 1) return;
        EtaQuotient cand = quotient_from_vector(N, divs, r);
        if (!passes_extra_criteria(cand)) return;
        found.push_back(cand);
      };
      // Recursive composition of `need` into the free slots.
      auto rec = [&](auto&& self, size_t k, int64_t remaining) -> void {
        if (k + 1 == free_slots.size()) {
          int64_t w = phi_c[free_slots[k]];
          if (remaining % w == 0) {
            o[k] = remaining / w;
            emit();
          }
          return;
        }
        int64_t w = phi_c[free_slots[k]];
        for (int64_t v = 0; v * w <= remaining; ++v) {
          o[k] = v;
          self(self, k + 1, remaining - v * w);
        }
      };
      if (free_slots.empty()) {
        if (need == 0) emit();
      } else {
        rec(rec, 0, need);
      }
    }
    if (found.empty()) result.refuted.push_back(D);
  }
  if (found.empty())
    throw std::domain_error("search_u: no candidate up to pole degree " +
                            std::to_string(d_max));

  auto l1 = [&](const EtaQuotient& e) {
    int64_t s = 0;
    for (int64_t d : divs) s += std::abs(e.exponent(d));
    return s;
  };
  auto lex_less = [&](const EtaQuotient& a, const EtaQuotient& b) {
    for (int64_t d : divs) {
      if (a.exponent(d) != b.exponent(d)) return a.exponent(d) < b.exponent(d);
    }
    return false;
  };
  std::sort(found.begin(), found.end(),
            [&](const EtaQuotient& a, const EtaQuotient& b) {
              if (l1(a) != l1(b)) return l1(a) < l1(b);
              return lex_less(a, b);
            });
  result.u = found.front();
  result.candidates_at_minimum = static_cast<int64_t>(found.size());
  Rat ord = order_at_infinity(result.u);
  result.pole_order = -static_cast<int64_t>(ord.get_num().get_si());
  return result;
}

}  // namespace x0eq
