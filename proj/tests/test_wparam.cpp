#include <doctest.h>

#include "x0eq/wparam.hpp"

using namespace x0eq;

namespace {

const WeierstrassCurve k34A1{1, 0, 0, -3, 1, 34, "34A1"};
const WeierstrassCurve k36A1{0, 0, 0, 0, 1, 36, "36A1"};
const WeierstrassCurve k43A1{0, 1, 1, 0, 0, 43, "43A1"};

ParamPair solve(const WeierstrassCurve& E, long prec) {
  QSeries h = newform_series(E, prec + 7);
  return parametrize(E, h, prec);
}

}  // namespace

TEST_CASE("leading terms of x and y") {
  for (const auto& E : {k34A1, k36A1, k43A1}) {
    ParamPair p = solve(E, 40);
    CHECK(p.x.valuation() == -2);
    CHECK(p.x.leading_coefficient() == 1);
    CHECK(p.y.valuation() == -3);
    CHECK(p.y.leading_coefficient() == 1);
    CHECK(p.curve_identity_order >= 40);
    CHECK(p.differential_identity_order >= 40);
  }
}

TEST_CASE("both defining identities hold simultaneously") {
  ParamPair p = solve(k34A1, 50);
  QSeries fres = p.curve.weierstrass_residual(p.x, p.y);
  CHECK(fres.is_zero());
  CHECK(fres.precision() >= 50);
  QSeries dres = p.x.q_derivative() +
                 p.h * (Rat(2) * p.y + Rat(p.curve.a1) * p.x +
                        QSeries::constant(Rat(p.curve.a3)));
  CHECK(dres.is_zero());
  CHECK(dres.precision() >= 50);
}

TEST_CASE("higher precision extends earlier coefficients") {
  ParamPair lo = solve(k34A1, 25);
  ParamPair hi = solve(k34A1, 55);
  CHECK(lo.x.agrees_with(hi.x));
  CHECK(lo.y.agrees_with(hi.y));
}

TEST_CASE("level 36 solution substituted with q^2 solves the level 72 pullback") {
  // x(q^2), y(q^2) still satisfy the curve equation; the substitution scales
  // the pulled-back differential by 2 (d(q^2)/q^2 = 2 dq/q).
  ParamPair p = solve(k36A1, 30);
  QSeries x2 = p.x.substitute_power(2);
  QSeries y2 = p.y.substitute_power(2);
  QSeries fres = p.curve.weierstrass_residual(x2, y2);
  CHECK(fres.is_zero());
  QSeries h2 = Rat(2) * p.h.substitute_power(2);
  QSeries dres = x2.q_derivative() +
                 h2 * (Rat(2) * y2 + Rat(p.curve.a1) * x2 +
                       QSeries::constant(Rat(p.curve.a3)));
  CHECK(dres.is_zero());
}

TEST_CASE("input validation") {
  QSeries h = newform_series(k34A1, 60);
  CHECK_THROWS_AS(parametrize(k34A1, h, 5), std::domain_error);
  CHECK_THROWS_AS(parametrize(k34A1, h, 56), std::domain_error);
  QSeries bad = Rat(2) * h;
  CHECK_THROWS_AS(parametrize(k34A1, bad, 20), std::domain_error);
}
