#include "x0eq/ecurve.hpp"

#include <sstream>
#include <stdexcept>

namespace x0eq {

WeierstrassCurve::Invariants WeierstrassCurve::invariants() const {
  Int A1(a1), A2(a2), A3(a3), A4(a4), A6(a6);
  Invariants v;
  v.b2 = A1 * A1 + 4 * A2;
  v.b4 = 2 * A4 + A1 * A3;
  v.b6 = A3 * A3 + 4 * A6;
  v.b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
           9 * v.b2 * v.b4 * v.b6;
  if (v.disc == 0)
    throw std::domain_error("WeierstrassCurve: singular model (disc = 0) for " +
                            label);
  return v;
}

QSeries WeierstrassCurve::weierstrass_residual(const QSeries& x,
                                               const QSeries& y) const {
  QSeries x2 = x * x;
  return y * y + Rat(a1) * (x * y) + Rat(a3) * y - x2 * x - Rat(a2) * x2 -
         Rat(a4) * x - QSeries::constant(Rat(a6));
}

std::string WeierstrassCurve::equation_str() const {
  std::ostringstream os;
  os << "y^2";
  if (a1 != 0) os << (a1 > 0 ? " + " : " - ") << (std::abs(a1) == 1 ? "" : std::to_string(std::abs(a1))) << "xy";
  if (a3 != 0) os << (a3 > 0 ? " + " : " - ") << (std::abs(a3) == 1 ? "" : std::to_string(std::abs(a3))) << "y";
  os << " = x^3";
  if (a2 != 0) os << (a2 > 0 ? " + " : " - ") << (std::abs(a2) == 1 ? "" : std::to_string(std::abs(a2))) << "x^2";
  if (a4 != 0) os << (a4 > 0 ? " + " : " - ") << (std::abs(a4) == 1 ? "" : std::to_string(std::abs(a4))) << "x";
  if (a6 != 0) os << (a6 > 0 ? " + " : " - ") << std::abs(a6);
  return os.str();
}

namespace {

int64_t eval_curve_mod(const WeierstrassCurve& E, int64_t x, int64_t y,
                       int64_t p) {
  // F = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 mod p
  int64_t lhs = (y * y + mod_reduce(E.a1, p) * x % p * y + mod_reduce(E.a3, p) * y) % p;
  int64_t x2 = x * x % p;
  int64_t rhs = (x2 * x + mod_reduce(E.a2, p) * x2 + mod_reduce(E.a4, p) * x +
                 mod_reduce(E.a6, p)) % p;
  return mod_reduce(lhs - rhs, p);
}

}  // namespace

int64_t count_points_naive(const WeierstrassCurve& E, int64_t p) {
  int64_t count = 1;  // point at infinity
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y)
      if (eval_curve_mod(E, x, y, p) == 0) ++count;
  return count;
}

int64_t count_points_fast(const WeierstrassCurve& E, int64_t p) {
  if (p == 2) return count_points_naive(E, p);
  // Complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  auto v = E.invariants();
  int64_t b2 = mod_reduce(mpz_class(v.b2 % p).get_si(), p);
  int64_t b4 = mod_reduce(mpz_class(v.b4 % p).get_si(), p);
  int64_t b6 = mod_reduce(mpz_class(v.b6 % p).get_si(), p);
  int64_t count = 1 + p;
  for (int64_t x = 0; x < p; ++x) {
    int64_t x2 = x * x % p;
    int64_t d = (4 * x % p * x2 + b2 * x2 + 2 * b4 % p * x + b6) % p;
    count += legendre_symbol(d, p);
  }
  return count;
}

namespace {

// Singular point of the reduced cubic mod p, if any.
bool find_singular_point(const WeierstrassCurve& E, int64_t p, int64_t& x0,
                         int64_t& y0) {
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y) {
      if (eval_curve_mod(E, x, y, p) != 0) continue;
      // F_y = 2y + a1 x + a3, F_x = a1 y - 3x^2 - 2 a2 x - a4
      int64_t fy = mod_reduce(2 * y + E.a1 * x + E.a3, p);
      int64_t fx = mod_reduce(E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4, p);
      if (fy == 0 && fx == 0) {
        x0 = x;
        y0 = y;
        return true;
      }
    }
  return false;
}

int64_t bad_prime_trace(const WeierstrassCurve& E, int64_t p) {
  int64_t vp = 0;
  for (int64_t n = E.conductor; n % p == 0; n /= p) ++vp;
  if (vp >= 2) return 0;  // additive
  // Multiplicative: split iff the tangent directions at the node are
  // rational. Translating the node to the origin leaves the quadratic part
  // Y^2 + a1 X Y - (3 x0 + a2) X^2.
  int64_t x0, y0;
  if (!find_singular_point(E, p, x0, y0))
    throw std::logic_error("trace_of_frobenius: multiplicative prime without "
                           "a singular point for " + E.label);
  int64_t cxx = mod_reduce(3 * x0 + E.a2, p);  // X^2 coefficient is -cxx
  if (p == 2) {
    // Y^2 + a1 XY + cxx X^2 over F_2: a node needs a1 odd; split iff the
    // roots of z^2 + z + cxx lie in F_2, i.e. cxx even.
    if (mod_reduce(E.a1, 2) == 0)
      throw std::logic_error("trace_of_frobenius: cusp-type singularity at a "
                             "multiplicative prime for " + E.label);
    return cxx == 0 ? 1 : -1;
  }
  int64_t disc = mod_reduce(E.a1 * E.a1 + 4 * cxx, p);
  if (disc == 0)
    throw std::logic_error("trace_of_frobenius: cusp-type singularity at a "
                           "multiplicative prime for " + E.label);
  return legendre_symbol(disc, p) == 1 ? 1 : -1;
}

}  // namespace

int64_t trace_of_frobenius(const WeierstrassCurve& E, int64_t p) {
  if (!is_prime(p)) throw std::domain_error("trace_of_frobenius: p not prime");
  if (E.conductor % p == 0) return bad_prime_trace(E, p);
  if (mpz_divisible_ui_p(E.discriminant().get_mpz_t(),
                         static_cast<unsigned long>(p)))
    throw std::runtime_error(
        "fixture inconsistency: prime " + std::to_string(p) +
        " divides disc(" + E.label + ") but not the conductor " +
        std::to_string(E.conductor));
  return p + 1 - count_points_fast(E, p);
}

std::vector<int64_t> an_coefficients(const WeierstrassCurve& E,
                                     int64_t n_max) {
  if (n_max < 1)
    throw std::domain_error("an_coefficients: n_max must be >= 1");
  // Smallest prime factor sieve, then ascending dynamic programming: every
  // index splits as p^k * m with p^k and m < n already final.
  std::vector<int64_t> spf(static_cast<size_t>(n_max) + 1, 0);
  for (int64_t i = 2; i <= n_max; ++i) {
    if (spf[static_cast<size_t>(i)] != 0) continue;
    for (int64_t j = i; j <= n_max; j += i)
      if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = i;
  }
  std::vector<int64_t> a(static_cast<size_t>(n_max) + 1, 0);
  a[1] = 1;
  for (int64_t n = 2; n <= n_max; ++n) {
    int64_t p = spf[static_cast<size_t>(n)];
    int64_t pk = p, m = n / p;
    while (m % p == 0) {
      pk *= p;
      m /= p;
    }
    if (m > 1) {
      a[static_cast<size_t>(n)] =
          a[static_cast<size_t>(pk)] * a[static_cast<size_t>(m)];
    } else if (n == p) {
      a[static_cast<size_t>(n)] = trace_of_frobenius(E, p);
    } else if (E.conductor % p == 0) {
      a[static_cast<size_t>(n)] =
          a[static_cast<size_t>(p)] * a[static_cast<size_t>(n / p)];
    } else {
      a[static_cast<size_t>(n)] =
          a[static_cast<size_t>(p)] * a[static_cast<size_t>(n / p)] -
          p * a[static_cast<size_t>(n / p / p)];
    }
  }
  return a;
}

QSeries newform_series(const WeierstrassCurve& E, long precision) {
  if (precision < 2)
    throw std::domain_error("newform_series: precision must be >= 2");
  auto a = an_coefficients(E, precision - 1);
  std::vector<Rat> c(static_cast<size_t>(precision - 1));
  for (long n = 1; n < precision; ++n)
    c[static_cast<size_t>(n - 1)] = Rat(a[static_cast<size_t>(n)]);
  return QSeries(1, std::move(c), precision);
}

void HRecipe::validate(int64_t level) const {
  if (terms.empty() || terms.front() != std::pair<int64_t, int64_t>{1, 1})
    throw std::domain_error("HRecipe: first term must be 1*f(q)");
  if (base_curve.conductor <= 0 || level % base_curve.conductor != 0)
    throw std::domain_error("HRecipe: base conductor must divide the level");
  int64_t ratio = level / base_curve.conductor / post_substitution;
  for (auto [c, l] : terms) {
    if (l < 1 || ratio % l != 0)
      throw std::domain_error("HRecipe: power " + std::to_string(l) +
                              " does not divide N/M");
  }
}

QSeries build_h(const HRecipe& recipe, long precision) {
  if (precision < 2)
    throw std::domain_error("build_h: precision must be >= 2");
  long base_prec = precision;
  if (recipe.post_substitution > 1)
    base_prec = (precision + recipe.post_substitution - 1) /
                recipe.post_substitution;
  QSeries f = newform_series(recipe.base_curve, base_prec);
  QSeries h = QSeries::zero(base_prec);
  for (auto [c, l] : recipe.terms)
    h = h + Rat(c) * f.substitute_power(l).truncated(base_prec);
  if (recipe.post_substitution > 1)
    h = h.substitute_power(recipe.post_substitution);
  return h.truncated(precision);
}

}  // namespace x0eq
