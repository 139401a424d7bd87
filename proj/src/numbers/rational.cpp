#include "finmat/numbers/rational.hpp"

#include "finmat/errors.hpp"

#include <cctype>
#include <numeric>

namespace finmat {

Rational frac(long n, long d) {
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  auto valid = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-') throw ParseError("bad rational: " + t);
  Integer nz(num), dz(den);
  if (dz == 0) throw DivisionByZero();
  Rational r{nz, dz};
  r.canonicalize();
  return r;
}

std::int64_t mod_p(const Rational& r, std::int64_t p) {
  Integer den = r.get_den() % p;
  if (den == 0) throw Error("denominator divisible by " + std::to_string(p));
  Integer num = r.get_num() % p;
  if (num < 0) num += p;
  std::int64_t n = num.get_si();
  return n * inv_mod(den.get_si(), p) % p;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r % m);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, y = 1, r = ((a % m) + m) % m;
  while (r != 0) {
    std::int64_t q = g / r;
    std::int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * y;
    x = y;
    y = t;
  }
  if (g != 1) throw DivisionByZero();
  return ((x % m) + m) % m;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

std::int64_t primitive_root(std::int64_t p) {
  auto fs = prime_divisors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : fs)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

int kronecker(std::int64_t D, std::int64_t k) {
  if (k == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  if (k < 0) {
    k = -k;
    if (D < 0) result = -result;
  }
  while (k % 2 == 0) {
    k /= 2;
    std::int64_t r = ((D % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  for (auto p : prime_divisors(k)) {
    std::int64_t e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    std::int64_t a = ((D % p) + p) % p;
    if (a == 0) return 0;
    if (e % 2 == 1 && pow_mod(a, (p - 1) / 2, p) != 1) result = -result;
  }
  return result;
}

}  // namespace finmat
