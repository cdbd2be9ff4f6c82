#include <doctest.h>

#include <cmath>

#include "x0eq/ecurve.hpp"
#include "x0eq/eta.hpp"

using namespace x0eq;

namespace {

const WeierstrassCurve k34A1{1, 0, 0, -3, 1, 34, "34A1"};
const WeierstrassCurve k36A1{0, 0, 0, 0, 1, 36, "36A1"};
const WeierstrassCurve k27A3{0, 0, 1, 0, 0, 27, "27A3"};
const WeierstrassCurve k43A1{0, 1, 1, 0, 0, 43, "43A1"};

// Point count over F_{p^2} = F_p[w]/(w^2 - s) for a nonresidue s; independent
// oracle for the Hecke recursion at p^2 via #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p).
int64_t count_points_fp2(const WeierstrassCurve& E, int64_t p) {
  int64_t s = 0;
  for (int64_t c = 2; c < p; ++c)
    if (legendre_symbol(c, p) == -1) {
      s = c;
      break;
    }
  REQUIRE(s != 0);
  auto add = [&](std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b) {
    return std::make_pair(mod_reduce(a.first + b.first, p),
                          mod_reduce(a.second + b.second, p));
  };
  auto mul = [&](std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b) {
    return std::make_pair(
        mod_reduce(a.first * b.first + s * (a.second * b.second % p), p),
        mod_reduce(a.first * b.second + a.second * b.first, p));
  };
  auto scal = [&](int64_t k, std::pair<int64_t, int64_t> a) {
    return std::make_pair(mod_reduce(k * a.first, p),
                          mod_reduce(k * a.second, p));
  };
  int64_t count = 1;
  for (int64_t x0 = 0; x0 < p; ++x0)
    for (int64_t x1 = 0; x1 < p; ++x1)
      for (int64_t y0 = 0; y0 < p; ++y0)
        for (int64_t y1 = 0; y1 < p; ++y1) {
          auto x = std::make_pair(x0, x1), y = std::make_pair(y0, y1);
          auto lhs = add(add(mul(y, y), mul(scal(E.a1, x), y)), scal(E.a3, y));
          auto x2 = mul(x, x);
          auto rhs = add(add(mul(x2, x), scal(E.a2, x2)),
                         add(scal(E.a4, x), std::make_pair(mod_reduce(E.a6, p), int64_t(0))));
          if (lhs == rhs) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("curve invariants") {
  auto v36 = k36A1.invariants();
  CHECK(v36.c4 == 0);
  CHECK(v36.c6 == -864);
  CHECK(v36.disc == -432);

  auto v34 = k34A1.invariants();
  CHECK(v34.disc == 1088);  // 2^6 * 17
  CHECK(v34.disc % 2 == 0);
  CHECK(v34.disc % 17 == 0);
  CHECK(1728 * v34.disc == v34.c4 * v34.c4 * v34.c4 - v34.c6 * v34.c6);

  WeierstrassCurve singular{0, 0, 0, 0, 0, 1, "cusp"};
  CHECK_THROWS_AS(singular.invariants(), std::domain_error);
}

TEST_CASE("1728 disc identity on several models") {
  for (const auto& E : {k34A1, k36A1, k27A3, k43A1}) {
    auto v = E.invariants();
    CHECK(1728 * v.disc == v.c4 * v.c4 * v.c4 - v.c6 * v.c6);
  }
}

TEST_CASE("a_p spot values") {
  CHECK(trace_of_frobenius(k34A1, 3) == -2);  // 6 points over F_3
  CHECK(count_points_naive(k34A1, 3) == 6);
  CHECK(trace_of_frobenius(k36A1, 2) == 0);  // 4 | 36: additive
  CHECK(trace_of_frobenius(k36A1, 3) == 0);  // 9 | 36: additive
  CHECK_THROWS_AS(trace_of_frobenius(k34A1, 4), std::domain_error);
}

TEST_CASE("fast point count equals naive count") {
  for (const auto& E : {k34A1, k36A1, k27A3, k43A1})
    for (int64_t p : primes_up_to(50)) {
      if (E.conductor % p == 0) continue;
      CHECK(count_points_fast(E, p) == count_points_naive(E, p));
    }
}

TEST_CASE("hasse bound at good primes") {
  for (const auto& E : {k34A1, k43A1})
    for (int64_t p : primes_up_to(400)) {
      if (E.conductor % p == 0) continue;
      int64_t ap = trace_of_frobenius(E, p);
      CHECK(static_cast<double>(ap) * ap <= 4.0 * static_cast<double>(p));
    }
}

TEST_CASE("bad prime traces") {
  // 34A1: split/non-split at 2 and 17 must land in {-1, +1}
  for (int64_t p : {int64_t(2), int64_t(17)}) {
    int64_t ap = trace_of_frobenius(k34A1, p);
    CHECK((ap == 1 || ap == -1));
    // cross-check: for multiplicative reduction #E^ns(F_p) = p - a_p, and the
    // affine point count of the singular cubic is exactly p - a_p.
    CHECK(count_points_naive(k34A1, p) - 1 == p - ap);
  }
  CHECK(trace_of_frobenius(k27A3, 3) == 0);
}

TEST_CASE("a_p invariance under unimodular change of variables") {
  // (x, y) -> (x + 1, y + x + 1) applied to 34A1
  // a1' = a1 + 2s, a2' = a2 - s a1 + 3r - s^2, a3' = a3 + r a1 + 2t,
  // a4' = a4 - s a3 + 2 r a2 - (t + r s) a1 + 3 r^2 - 2 s t,
  // a6' = a6 + r a4 + r^2 a2 + r^3 - t a3 - t^2 - r t a1
  int64_t r = 1, s = 1, t = 1;
  const auto& E = k34A1;
  WeierstrassCurve T;
  T.a1 = E.a1 + 2 * s;
  T.a2 = E.a2 - s * E.a1 + 3 * r - s * s;
  T.a3 = E.a3 + r * E.a1 + 2 * t;
  T.a4 = E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r -
         2 * s * t;
  T.a6 = E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t -
         r * t * E.a1;
  T.conductor = E.conductor;
  T.label = "34A1'";
  CHECK(T.invariants().disc == E.invariants().disc);
  for (int64_t p : primes_up_to(60))
    CHECK(trace_of_frobenius(T, p) == trace_of_frobenius(E, p));
}

TEST_CASE("discriminant prime outside the conductor is a fixture defect") {
  // 34A1 with a wrong conductor: 17 divides the discriminant 1088 but not 2
  WeierstrassCurve wrong = k34A1;
  wrong.conductor = 2;
  wrong.label = "bogus";
  CHECK_THROWS_AS(trace_of_frobenius(wrong, 17), std::runtime_error);
}

TEST_CASE("hecke recursion") {
  auto a = an_coefficients(k34A1, 60);
  CHECK(a[1] == 1);
  CHECK(a[3] == -2);
  CHECK(a[9] == a[3] * a[3] - 3);
  CHECK(a[9] == 1);
  CHECK(a[6] == a[2] * a[3]);
  CHECK(a[12] == a[4] * a[3]);
  CHECK(a[34] == a[2] * a[17]);
  // multiplicativity on random-ish coprime pairs
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 8}, {5, 9}, {7, 8}, {6, 7}})
    CHECK(a[static_cast<size_t>(m * n)] ==
          a[static_cast<size_t>(m)] * a[static_cast<size_t>(n)]);
}

TEST_CASE("a_9 against the F_9 point count") {
  // #E(F_9) = 9 + 1 - (a_3^2 - 2*3)
  auto a = an_coefficients(k34A1, 9);
  int64_t expect = 9 + 1 - (a[3] * a[3] - 6);
  CHECK(count_points_fp2(k34A1, 3) == expect);
  CHECK(expect == 12);
}

TEST_CASE("newforms with eta product expansions") {
  // f_36A = eta(6z)^4 and f_27A = eta(3z)^2 eta(9z)^2
  long prec = 121;
  QSeries f36 = newform_series(k36A1, prec);
  QSeries e36 = eta_quotient_series(EtaQuotient(36, {{6, 4}}), prec);
  CHECK(f36.agrees_with(e36));
  QSeries f27 = newform_series(k27A3, prec);
  QSeries e27 = eta_quotient_series(EtaQuotient(27, {{3, 2}, {9, 2}}), prec);
  CHECK(f27.agrees_with(e27));
}

TEST_CASE("build_h recipes") {
  HRecipe plain{k34A1, {{1, 1}}, 1};
  plain.validate(34);
  QSeries h = build_h(plain, 30);
  CHECK(h.agrees_with(newform_series(k34A1, 30)));

  // level 42 style: f(q) + 2 f(q^2) on a conductor-21 base
  WeierstrassCurve b21{1, 0, 0, 1, 0, 21, "21A4"};
  HRecipe mix{b21, {{1, 1}, {2, 2}}, 1};
  mix.validate(42);
  QSeries h42 = build_h(mix, 25);
  QSeries f = newform_series(b21, 25);
  CHECK(h42.agrees_with(f + Rat(2) * f.substitute_power(2).truncated(25)));
  CHECK(h42.coefficient(1) == 1);

  // level 72 style: f_36A(q^2)
  HRecipe sub{k36A1, {{1, 1}}, 2};
  sub.validate(72);
  QSeries h72 = build_h(sub, 40);
  CHECK(h72.valuation() == 2);
  CHECK(h72.agrees_with(newform_series(k36A1, 21).substitute_power(2)));

  HRecipe bad{k34A1, {{2, 1}}, 1};
  CHECK_THROWS_AS(bad.validate(34), std::domain_error);
}
