#include "finmat/numbers/cyclotomic.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace finmat {

namespace {

struct PrimePart {
  int p;
  int nu;
  int P;  // p^nu
  int M;  // N / p^nu
  int u;  // CRT idempotent: u = 1 mod P, u = 0 mod M
};

std::vector<PrimePart> prime_parts(int N) {
  std::vector<PrimePart> out;
  for (auto p64 : prime_divisors(N)) {
    int p = static_cast<int>(p64);
    int P = 1, nu = 0;
    while (N % (P * p) == 0) {
      P *= p;
      ++nu;
    }
    int M = N / P;
    int u = (M == 1) ? 1 : static_cast<int>(M * inv_mod(M % P, P));
    out.push_back({p, nu, P, M, u});
  }
  return out;
}

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Rewrites c (length N) into the Zumbroich basis of Q(zeta_N).
void zumbroich_reduce(int N, std::vector<Rational>& c) {
  for (const auto& pp : prime_parts(N)) {
    int Q = pp.P / pp.p;
    for (int e = 0; e < N; ++e) {
      if (sgn(c[e]) == 0) continue;
      int x = e % pp.P;
      if (pp.p == 2) {
        if (x >= Q) {
          c[mod(e - static_cast<long>(Q) * pp.u, N)] -= c[e];
          c[e] = 0;
        }
      } else if (x / Q == 0) {
        Rational v = c[e];
        c[e] = 0;
        for (int b = 1; b < pp.p; ++b) c[mod(e + static_cast<long>(b) * Q * pp.u, N)] -= v;
      }
    }
  }
}

std::vector<Rational> galois_dense(int N, const std::vector<Rational>& c, long k) {
  std::vector<Rational> out(N);
  for (int e = 0; e < N; ++e)
    if (sgn(c[e]) != 0) out[mod(static_cast<long>(e) * k, N)] += c[e];
  zumbroich_reduce(N, out);
  return out;
}

// Lowers N while the element lies in a smaller cyclotomic field. c must be reduced.
void minimize(int& N, std::vector<Rational>& c) {
  bool changed = true;
  while (changed && N > 1) {
    changed = false;
    for (const auto& pp : prime_parts(N)) {
      int p = pp.p;
      int Np = N / p;
      if (pp.nu >= 2) {
        long k = 1 + Np;
        if (galois_dense(N, c, k) != c) continue;
        std::vector<Rational> d(Np);
        for (int e = 0; e < N; e += p) d[e / p] = c[e];
        zumbroich_reduce(Np, d);
        c = std::move(d);
      } else {
        if (p != 2) {
          long g = primitive_root(p);
          long k = mod(static_cast<long>(pp.u) * g + (1 - static_cast<long>(pp.u)), N);
          if (galois_dense(N, c, k) != c) continue;
        }
        std::vector<Rational> d(Np);
        Rational off = Rational(-1, p - 1);
        for (int e = 0; e < N; ++e) {
          if (sgn(c[e]) == 0) continue;
          int ep = e % p;
          int e2 = mod(e - static_cast<long>(ep) * pp.u, N);
          if (ep == 0)
            d[(e2 / p) % Np] += c[e];
          else
            d[(e2 / p) % Np] += c[e] * off;
        }
        zumbroich_reduce(Np, d);
        c = std::move(d);
      }
      N = Np;
      changed = true;
      break;
    }
  }
}

}  // namespace

CycNum::CycNum(long v) : CycNum(Rational(v)) {}

CycNum::CycNum(const Rational& v) {
  if (sgn(v) != 0) t_.emplace_back(0, v);
}

std::vector<int> CycNum::basis(int N) {
  auto parts = prime_parts(N);
  std::vector<int> out;
  for (int e = 0; e < N; ++e) {
    bool ok = true;
    for (const auto& pp : parts) {
      int Q = pp.P / pp.p;
      int x = e % pp.P;
      if (pp.p == 2 ? x >= Q : x / Q == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

CycNum CycNum::from_powers(int N, std::vector<Rational> c) {
  if (N < 1 || static_cast<int>(c.size()) != N) throw Error("from_powers: bad length");
  zumbroich_reduce(N, c);
  minimize(N, c);
  CycNum r;
  r.n_ = N;
  for (int e = 0; e < N; ++e)
    if (sgn(c[e]) != 0) r.t_.emplace_back(e, c[e]);
  if (r.t_.empty()) r.n_ = 1;
  return r;
}

CycNum CycNum::zeta(int N, long k) {
  if (N < 1) throw Error("zeta: order must be positive");
  std::vector<Rational> c(N);
  c[mod(k, N)] = 1;
  return from_powers(N, std::move(c));
}

Rational CycNum::rational_value() const {
  if (n_ != 1) throw Error("not a rational number: " + str());
  return t_.empty() ? Rational(0) : t_[0].second;
}

bool CycNum::is_integral_coords() const {
  return std::all_of(t_.begin(), t_.end(), [](const Term& t) { return t.second.get_den() == 1; });
}

CycNum CycNum::galois(long k) const {
  if (n_ == 1) return *this;
  if (std::gcd(static_cast<long>(n_), k) != 1) throw Error("galois: exponent not coprime to order");
  std::vector<Rational> c(n_);
  for (const auto& [e, v] : t_) c[mod(static_cast<long>(e) * k, n_)] += v;
  return from_powers(n_, std::move(c));
}

CycNum& CycNum::operator+=(const CycNum& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (n_ == 1 && b.n_ == 1) {
    Rational s = t_[0].second + b.t_[0].second;
    return *this = CycNum(s);
  }
  int L = std::lcm(n_, b.n_);
  std::vector<Rational> c(L);
  for (const auto& [e, v] : t_) c[e * (L / n_)] += v;
  for (const auto& [e, v] : b.t_) c[e * (L / b.n_)] += v;
  return *this = from_powers(L, std::move(c));
}

CycNum& CycNum::operator-=(const CycNum& b) { return *this += -b; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.n_ == 1) return b.scaled(a.t_[0].second);
  if (b.n_ == 1) return a.scaled(b.t_[0].second);
  int L = std::lcm(a.n_, b.n_);
  int sa = L / a.n_, sb = L / b.n_;
  std::vector<Rational> c(L);
  for (const auto& [ea, va] : a.t_)
    for (const auto& [eb, vb] : b.t_) c[(ea * sa + eb * sb) % L] += va * vb;
  return CycNum::from_powers(L, std::move(c));
}

CycNum& CycNum::operator*=(const CycNum& b) { return *this = *this * b; }

CycNum CycNum::scaled(const Rational& r) const {
  if (sgn(r) == 0) return CycNum();
  CycNum out = *this;
  for (auto& t : out.t_) t.second *= r;
  return out;
}

CycNum CycNum::times_zeta(int N, long k) const {
  if (is_zero()) return *this;
  int L = std::lcm(n_, N);
  std::vector<Rational> c(L);
  long shift = static_cast<long>(mod(k, N)) * (L / N);
  for (const auto& [e, v] : t_) c[mod(e * (L / n_) + shift, L)] += v;
  return from_powers(L, std::move(c));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return CycNum(1 / t_[0].second);
  int N = n_;
  auto B = basis(N);
  int d = static_cast<int>(B.size());
  std::vector<int> pos(N, -1);
  for (int i = 0; i < d; ++i) pos[B[i]] = i;
  // Column j holds the coordinates of a * zeta^B[j].
  std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> c(N);
    for (const auto& [e, v] : t_) c[(e + B[j]) % N] += v;
    zumbroich_reduce(N, c);
    for (int e = 0; e < N; ++e)
      if (sgn(c[e]) != 0) A[pos[e]][j] = c[e];
  }
  std::vector<Rational> one(N);
  one[0] = 1;
  zumbroich_reduce(N, one);
  for (int e = 0; e < N; ++e)
    if (sgn(one[e]) != 0) A[pos[e]][d] = one[e];
  for (int col = 0, row = 0; col < d; ++col, ++row) {
    int piv = row;
    while (piv < d && sgn(A[piv][col]) == 0) ++piv;
    if (piv == d) throw InvariantViolation("cyclotomic inverse: singular multiplication map");
    std::swap(A[piv], A[row]);
    Rational inv = 1 / A[row][col];
    for (int k = col; k <= d; ++k) A[row][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == row || sgn(A[r][col]) == 0) continue;
      Rational f = A[r][col];
      for (int k = col; k <= d; ++k) A[r][k] -= f * A[row][k];
    }
  }
  std::vector<Rational> c(N);
  for (int i = 0; i < d; ++i) c[B[i]] = A[i][d];
  return from_powers(N, std::move(c));
}

CycNum& CycNum::operator/=(const CycNum& b) { return *this *= b.inverse(); }

bool operator<(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.t_ < b.t_;
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw Error(std::string("unknown operation ") + op);
  }
}

std::int64_t CycNum::eval_mod(std::int64_t ell, std::int64_t z, int e) const {
  if (e % n_ != 0) throw Error("eval_mod: order does not divide e");
  std::int64_t zz = pow_mod(z, e / n_, ell);
  std::int64_t acc = 0;
  for (const auto& [k, v] : t_) acc = (acc + mod_p(v, ell) * pow_mod(zz, k, ell)) % ell;
  return acc;
}

std::string CycNum::str() const {
  if (t_.empty()) return "0";
  if (n_ == 1) return to_string(t_[0].second);
  std::string s;
  bool first = true;
  for (const auto& [e, v] : t_) {
    Rational a = abs(v);
    if (first)
      s += sgn(v) < 0 ? "-" : "";
    else
      s += sgn(v) < 0 ? " - " : " + ";
    first = false;
    if (a != 1) s += to_string(a) + "*";
    s += "z{" + std::to_string(n_) + "}^" + std::to_string(e);
  }
  return s;
}

CycNum CycNum::parse(std::string_view in) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.rfind("sum(", 0) == 0 && !s.empty() && s.back() == ')') s = s.substr(4, s.size() - 5);
  if (s.empty()) throw ParseError("empty cyclotomic number");
  CycNum acc;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '^')) ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("empty term in: " + s);
    auto zpos = term.find("z{");
    if (zpos == std::string::npos) {
      acc += CycNum(parse_rational(term) * sign);
    } else {
      Rational coef = 1;
      if (zpos > 0) {
        if (term[zpos - 1] != '*') throw ParseError("expected '*' before z in: " + term);
        coef = parse_rational(term.substr(0, zpos - 1));
      }
      auto close = term.find('}', zpos);
      if (close == std::string::npos) throw ParseError("unterminated z{ in: " + term);
      int N = 0;
      long k = 1;
      try {
        N = std::stoi(term.substr(zpos + 2, close - zpos - 2));
        if (close + 1 < term.size()) {
          if (term[close + 1] != '^') throw ParseError("expected '^' in: " + term);
          std::size_t used = 0;
          std::string ks = term.substr(close + 2);
          k = std::stol(ks, &used);
          if (used != ks.size()) throw ParseError("bad exponent in: " + term);
        }
      } catch (const std::logic_error&) {
        throw ParseError("bad root of unity in: " + term);
      }
      if (N < 1) throw ParseError("bad order in: " + term);
      acc += zeta(N, k).scaled(coef * sign);
    }
    i = j;
  }
  return acc;
}

std::size_t CycNum::hash() const {
  std::size_t h = std::hash<int>()(n_);
  for (const auto& [e, v] : t_) {
    h ^= std::hash<int>()(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long>()(mpz_get_si(v.get_num_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long>()(mpz_get_si(v.get_den_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> z = 0;
  for (const auto& [e, v] : t_) {
    double ang = 2.0 * M_PI * e / n_;
    z += v.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

}  // namespace finmat
