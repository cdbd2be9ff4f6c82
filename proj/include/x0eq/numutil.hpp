#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace x0eq {

using Int = mpz_class;
using Rat = mpq_class;

// Small-integer number theory on int64. Everything here is for moduli and
// levels bounded by a few hundred; no attempt at asymptotic cleverness.

int64_t gcd_ll(int64_t a, int64_t b);
// g = gcd(a,b) and x,y with a*x + b*y = g.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y);
// Inverse of a mod m (m >= 1). Throws std::domain_error if gcd(a,m) != 1.
int64_t mod_inverse(int64_t a, int64_t m);
int64_t mod_reduce(int64_t a, int64_t m);  // representative in [0, m)

bool is_prime(int64_t n);
std::vector<int64_t> primes_up_to(int64_t n);
// Prime factorization by trial division, exponent map.
std::map<int64_t, int> factorize(int64_t n);
std::vector<int64_t> divisors(int64_t n);  // sorted ascending
int64_t euler_phi(int64_t n);

// Q | N with gcd(Q, N/Q) = 1.
bool is_exact_divisor(int64_t q, int64_t n);

// Legendre symbol (a|p) for odd prime p.
int legendre_symbol(int64_t a, int64_t p);

// Parses "131^6", "-43", "17" into an exact integer.
Int parse_power_int(const std::string& s);

}  // namespace x0eq
