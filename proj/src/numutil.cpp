#include "x0eq/numutil.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace x0eq {

int64_t gcd_ll(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  int64_t x1, y1;
  int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

int64_t mod_reduce(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t mod_inverse(int64_t a, int64_t m) {
  if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  int64_t x, y;
  int64_t g = ext_gcd(mod_reduce(a, m), m, x, y);
  if (g != 1) throw std::domain_error("mod_inverse: not invertible");
  return mod_reduce(x, m);
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int64_t> primes_up_to(int64_t n) {
  std::vector<int64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  for (int64_t p = 2; p <= n; ++p) {
    if (comp[static_cast<size_t>(p)]) continue;
    out.push_back(p);
    for (int64_t k = p * p; k <= n; k += p) comp[static_cast<size_t>(k)] = true;
  }
  return out;
}

std::map<int64_t, int> factorize(int64_t n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::map<int64_t, int> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = out.size();
    int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

bool is_exact_divisor(int64_t q, int64_t n) {
  return q >= 1 && n % q == 0 && gcd_ll(q, n / q) == 1;
}

int legendre_symbol(int64_t a, int64_t p) {
  return mpz_legendre(Int(a).get_mpz_t(), Int(p).get_mpz_t());
}

Int parse_power_int(const std::string& s) {
  auto caret = s.find('^');
  if (caret == std::string::npos) return Int(s);
  // A leading sign applies to the whole power: "-7^2" means -(7^2).
  bool negate = !s.empty() && s[0] == '-';
  size_t start = (negate || (!s.empty() && s[0] == '+')) ? 1 : 0;
  Int base(s.substr(start, caret - start));
  unsigned long e = std::stoul(s.substr(caret + 1));
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return negate ? Int(-out) : out;
}

}  // namespace x0eq
