#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace finmat {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized n/d; mpq_class(n, d) alone does not reduce.
Rational frac(long n, long d);

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

// Residue of r modulo the prime p; throws if p divides the denominator.
std::int64_t mod_p(const Rational& r, std::int64_t p);

bool is_integer(const Rational& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
bool is_prime(std::int64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t primitive_root(std::int64_t p);
// Kronecker symbol (D / k).
int kronecker(std::int64_t D, std::int64_t k);

}  // namespace finmat
