#pragma once

#include "x0eq/ecurve.hpp"
#include "x0eq/qseries.hpp"

namespace x0eq {

// q-expansions of the Weierstrass coordinate functions of a degree-one or
// degree-two modular parametrization in Manin normalization:
//   x = q^-2 + sum_{n >= -1} a_n q^n,   y = q^-3 + sum_{n >= -2} b_n q^n,
// satisfying F(x, y) = 0 and q dx/dq = -h (2y + a1 x + a3) to the stated
// precision.
struct ParamPair {
  QSeries x;
  QSeries y;
  WeierstrassCurve curve;
  QSeries h;

  // Orders through which the two defining identities were verified to vanish
  // (at least the series precision on success).
  long curve_identity_order = 0;
  long differential_identity_order = 0;
};

// Solves the coefficients of x recursively from the squared differential
// relation (q dx/dq)^2 = h^2 (4x^3 + b2 x^2 + 2 b4 x + b6): the coefficient
// a_n enters the order-(n-2) coefficient equation linearly with pivot
// -4(n+3), which never vanishes for n >= -1. y is then
// -((q dx/dq)/h + a1 x + a3) / 2.
//
// h must be normalized with valuation 1 and leading coefficient 1, trusted
// modulo q^{precision + 4} at least. Both output series are trusted modulo
// q^precision; both ParamPair identities are re-verified with generic series
// arithmetic before returning.
ParamPair parametrize(const WeierstrassCurve& E, const QSeries& h,
                      long precision);

}  // namespace x0eq
