#include "x0eq/wparam.hpp"

#include <algorithm>
#include <stdexcept>

namespace x0eq {

namespace {

// Dense coefficient frame over exponents [kBase, top]; writes outside the
// frame are clipped, so the frame top must cover every exponent that is ever
// read back.
constexpr long kBase = -6;

struct Frame {
  std::vector<Rat> c;

  explicit Frame(size_t len) : c(len, Rat(0)) {}
  long top() const { return kBase + static_cast<long>(c.size()) - 1; }
  Rat& at(long e) { return c[static_cast<size_t>(e - kBase)]; }
  // dst += scale * q^shift * src for src entries starting at exponent src_lo.
  void add_shifted(const Frame& src, long src_lo, long shift,
                   const Rat& scale) {
    if (scale == 0) return;
    long e = std::max({src_lo, kBase, kBase - shift});
    long e_hi = std::min(src.top(), top() - shift);
    for (; e <= e_hi; ++e) {
      const Rat& v = src.c[static_cast<size_t>(e - kBase)];
      if (v != 0) at(e + shift) += scale * v;
    }
  }
  void add_monomial(long e, const Rat& v) {
    if (e >= kBase && e <= top()) at(e) += v;
  }
  void load(const QSeries& s) {
    long hi = std::min(s.precision() - 1, top());
    for (long e = std::max(s.valuation(), kBase); e <= hi; ++e)
      at(e) = s.coefficient(e);
  }
};

}  // namespace

ParamPair parametrize(const WeierstrassCurve& E, const QSeries& h,
                      long precision) {
  if (precision < 10)
    throw std::domain_error("parametrize: precision must be >= 10");
  if (h.is_zero() || h.valuation() != 1 || h.leading_coefficient() != 1)
    throw std::domain_error(
        "parametrize: h must be normalized with valuation 1");
  if (h.precision() < precision + 7)
    throw std::domain_error("parametrize: h precision too small for the "
                            "requested output precision");

  // Solve three orders past the request so that the curve identity, whose
  // residual sits at valuation -6, is still verified through q^precision.
  const long n_last = precision + 3;
  const long frame_top = n_last + 4;
  const size_t len = static_cast<size_t>(frame_top - kBase + 1);
  auto inv = E.invariants();
  const Rat b2(inv.b2), b4(inv.b4), b6(inv.b6);

  QSeries h2q = h * h;  // trusted past frame_top by the precondition
  Frame H2(len), H2X(len), H2X2(len), DX(len), R(len);
  H2.load(h2q);
  // Start from x = q^-2.
  DX.add_monomial(-2, Rat(-2));
  H2X.add_shifted(H2, 2, -2, Rat(1));
  H2X2.add_shifted(H2, 2, -4, Rat(1));
  // R = (q x')^2 - h^2 (4 x^3 + b2 x^2 + 2 b4 x + b6) at x = q^-2.
  R.add_monomial(-4, Rat(4));
  R.add_shifted(H2, 2, -6, Rat(-4));
  R.add_shifted(H2, 2, -4, -b2);
  R.add_shifted(H2, 2, -2, Rat(-2) * b4);
  R.add_shifted(H2, 2, 0, -b6);

  std::vector<Rat> xc(static_cast<size_t>(n_last + 3), Rat(0));  // a_{-2}..
  xc[0] = 1;
  for (long n = -1; n <= n_last; ++n) {
    Rat g = R.at(n - 2) / Rat(4 * (n + 3));
    if (g == 0) continue;
    xc[static_cast<size_t>(n + 2)] = g;
    const Rat ng = Rat(n) * g, g2 = g * g, g3 = g2 * g;
    // x -> x + g q^n; every read below is against the pre-update state.
    R.add_shifted(DX, -2, n, 2 * ng);
    R.add_monomial(2 * n, ng * ng);
    R.add_shifted(H2X2, -2, n, Rat(-12) * g);
    R.add_shifted(H2X, 0, 2 * n, Rat(-12) * g2);
    R.add_shifted(H2, 2, 3 * n, Rat(-4) * g3);
    R.add_shifted(H2X, 0, n, Rat(-2) * b2 * g);
    R.add_shifted(H2, 2, 2 * n, -b2 * g2);
    R.add_shifted(H2, 2, n, Rat(-2) * b4 * g);
    H2X2.add_shifted(H2X, 0, n, 2 * g);
    H2X2.add_shifted(H2, 2, 2 * n, g2);
    H2X.add_shifted(H2, 2, n, g);
    DX.add_monomial(n, ng);
  }

  QSeries x(-2, std::move(xc), n_last + 1);
  QSeries qdx = x.q_derivative();
  QSeries y = Rat(-1, 2) * (qdx * h.inverse() + Rat(E.a1) * x +
                            QSeries::constant(Rat(E.a3)));

  ParamPair out{x, y, E, h, 0, 0};
  if (x.valuation() != -2 || x.leading_coefficient() != 1 ||
      y.valuation() != -3 || y.leading_coefficient() != 1)
    throw std::logic_error("parametrize: solution lost the normalized shape");

  // Independent re-verification with generic series arithmetic.
  QSeries fres = E.weierstrass_residual(x, y);
  QSeries dres = qdx + h * (Rat(2) * y + Rat(E.a1) * x +
                            QSeries::constant(Rat(E.a3)));
  if (!fres.is_zero() || !dres.is_zero())
    throw std::logic_error(
        "parametrize: defining identities fail at order " +
        std::to_string(std::min(fres.order_of_vanishing(),
                                dres.order_of_vanishing())));
  out.curve_identity_order = fres.precision();
  out.differential_identity_order = dres.precision();
  if (out.curve_identity_order < precision ||
      out.differential_identity_order < precision)
    throw std::logic_error("parametrize: verification precision fell short");
  return out;
}

}  // namespace x0eq
