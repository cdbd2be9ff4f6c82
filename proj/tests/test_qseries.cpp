#include <doctest.h>

#include "x0eq/qseries.hpp"

using namespace x0eq;

namespace {

// Deterministic little generator for property tests.
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  Rat rat() {
    long num = pick(-9, 9);
    long den = pick(1, 7);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  QSeries series(long prec) {
    long val = pick(-4, 3);
    std::vector<Rat> c;
    for (long e = val; e < prec; ++e) c.push_back(rat());
    return QSeries(val, std::move(c), prec);
  }
};

}  // namespace

TEST_CASE("addition with cancellation") {
  QSeries a(0, {Rat(1), Rat(1)}, 10);   // 1 + q
  QSeries b(0, {Rat(1), Rat(-1)}, 10);  // 1 - q
  QSeries s = a + b;
  CHECK(s.coefficient(0) == 2);
  CHECK(s.coefficient(1) == 0);
  CHECK(s.valuation() == 0);
  CHECK(s.precision() == 10);
}

TEST_CASE("valuation additivity of multiplication") {
  QSeries qinv = QSeries::monomial(Rat(1), -1, 9);
  QSeries q = QSeries::monomial(Rat(1), 1, 11);
  QSeries p = qinv * q;
  CHECK(p.valuation() == 0);
  CHECK(p.coefficient(0) == 1);
  // honest product precision: min(9 + 1, 11 + (-1)) = 10
  CHECK(p.precision() == 10);
}

TEST_CASE("geometric series inverse against long multiplication") {
  long prec = 40;
  QSeries one_minus_q(0, {Rat(1), Rat(-1)}, prec);
  // independent oracle: geometric series built directly
  std::vector<Rat> g(static_cast<size_t>(prec), Rat(1));
  QSeries geom(0, std::move(g), prec);
  QSeries prod = one_minus_q * geom;
  CHECK(prod.coefficient(0) == 1);
  for (long n = 1; n < prod.precision(); ++n) CHECK(prod.coefficient(n) == 0);
  CHECK(one_minus_q.inverse().agrees_with(geom));
}

TEST_CASE("inverse examples and error") {
  CHECK(QSeries::constant(Rat(1), 20).inverse().coefficient(0) == 1);
  QSeries q2 = QSeries::monomial(Rat(1), 2, 20);
  CHECK(q2.inverse().valuation() == -2);
  CHECK_THROWS_AS(QSeries::zero(5).inverse(), std::domain_error);
  // a * a^-1 = 1 for a generic unit
  Lcg rng(7);
  for (int it = 0; it < 20; ++it) {
    QSeries a = rng.series(15);
    if (a.is_zero()) continue;
    QSeries prod = a * a.inverse();
    CHECK(prod.agrees_with(QSeries::constant(Rat(1))));
  }
}

TEST_CASE("q_derivative basics and Leibniz rule") {
  CHECK(QSeries::constant(Rat(5), 8).q_derivative().is_zero());
  QSeries qn = QSeries::monomial(Rat(1), 7, 20);
  CHECK(qn.q_derivative().coefficient(7) == 7);
  QSeries p(0, {Rat(1), Rat(2), Rat(3)}, 10);  // 1 + 2q + 3q^2
  QSeries dp = p.q_derivative();
  CHECK(dp.coefficient(1) == 2);
  CHECK(dp.coefficient(2) == 6);
  Lcg rng(11);
  for (int it = 0; it < 20; ++it) {
    QSeries a = rng.series(12), b = rng.series(12);
    QSeries lhs = (a * b).q_derivative();
    QSeries rhs = a.q_derivative() * b + a * b.q_derivative();
    CHECK(lhs.agrees_with(rhs));
  }
}

TEST_CASE("substitute_power") {
  QSeries f(1, {Rat(1), Rat(0), Rat(1)}, 6);  // q + q^3
  CHECK(f.substitute_power(1).agrees_with(f));
  QSeries g = f.substitute_power(2);
  CHECK(g.coefficient(2) == 1);
  CHECK(g.coefficient(6) == 1);
  CHECK(g.coefficient(4) == 0);
  CHECK(g.precision() == 12);
  CHECK_THROWS_AS(f.substitute_power(0), std::domain_error);
  // ring homomorphism on random pairs
  Lcg rng(13);
  for (int it = 0; it < 16; ++it) {
    QSeries a = rng.series(10), b = rng.series(10);
    long d = rng.pick(2, 4);
    CHECK((a * b).substitute_power(d)
              .agrees_with(a.substitute_power(d) * b.substitute_power(d)));
    CHECK((a + b).substitute_power(d)
              .agrees_with(a.substitute_power(d) + b.substitute_power(d)));
  }
}

TEST_CASE("coefficient access rules") {
  QSeries s(-2, {Rat(1), Rat(0), Rat(3)}, 9);  // q^-2 + 3
  CHECK(s.coefficient(-2) == 1);
  CHECK(s.coefficient(0) == 3);
  CHECK(s.coefficient(-5) == 0);
  CHECK(s.coefficient(5) == 0);
  CHECK_THROWS_AS(s.coefficient(9), std::domain_error);
  CHECK_THROWS_AS(s.coefficient(100), std::domain_error);
}

TEST_CASE("ring axioms on random series") {
  Lcg rng(42);
  for (int it = 0; it < 25; ++it) {
    QSeries a = rng.series(9), b = rng.series(9), c = rng.series(9);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a + b).agrees_with(b + a));
    CHECK((a * b).agrees_with(b * a));
  }
}

TEST_CASE("normalized representation") {
  QSeries s(3, {Rat(0), Rat(0), Rat(2), Rat(0)}, 20);
  CHECK(s.valuation() == 5);
  CHECK(s.leading_coefficient() == 2);
  QSeries z(0, {Rat(0), Rat(0)}, 20);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 20);
}
