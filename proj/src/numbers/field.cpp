#include "finmat/numbers/field.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace finmat {

namespace {

bool squarefree(long d) {
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

CycNum gauss_sum(long D) {
  long N = D < 0 ? -D : D;
  std::vector<Rational> c(N);
  for (long k = 1; k < N; ++k) c[k] = kronecker(D, k);
  return CycNum::from_powers(static_cast<int>(N), std::move(c));
}

FieldDescriptor quadratic(long d, bool imaginary) {
  if (d < 1 || !squarefree(d) || (!imaginary && d == 1))
    throw Error("quadratic field needs a squarefree d > 1 (or d >= 1 for imaginary)");
  FieldDescriptor K;
  K.kind = imaginary ? FieldDescriptor::Kind::ImagQuadratic : FieldDescriptor::Kind::RealQuadratic;
  K.d = d;
  long dd = imaginary ? -d : d;
  long m4 = ((dd % 4) + 4) % 4;
  K.discriminant = (m4 == 1) ? dd : 4 * dd;
  K.conductor = K.discriminant < 0 ? -K.discriminant : K.discriminant;
  CycNum g = gauss_sum(K.discriminant);
  K.sqrt_value = (m4 == 1) ? g : g.scaled(Rational(1, 2));
  K.ring_generator = (m4 == 1) ? (K.sqrt_value + CycNum(1)).scaled(Rational(1, 2)) : K.sqrt_value;
  return K;
}

// Splits s into signed terms: returns (sign, text) pairs.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    if (j == i) throw ParseError("empty term in: " + s);
    out.emplace_back(sign, s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor{}; }
FieldDescriptor FieldDescriptor::imag_quadratic(long d) { return quadratic(d, true); }
FieldDescriptor FieldDescriptor::real_quadratic(long d) { return quadratic(d, false); }

FieldDescriptor FieldDescriptor::parse(std::string_view in) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "Q" || s == "QQ") return rationals();
  if (s == "Q(i)" || s == "Q[i]") return imag_quadratic(1);
  for (auto [open, close] : {std::pair{"Q(sqrt(", "))"}, std::pair{"Q[sqrt(", ")]"}}) {
    std::string o = open, c = close;
    if (s.rfind(o, 0) == 0 && s.size() > o.size() + c.size() &&
        s.compare(s.size() - c.size(), c.size(), c) == 0) {
      std::string num = s.substr(o.size(), s.size() - o.size() - c.size());
      long v = 0;
      try {
        std::size_t used = 0;
        v = std::stol(num, &used);
        if (used != num.size()) throw ParseError("bad field: " + s);
      } catch (const std::logic_error&) {
        throw ParseError("bad field: " + s);
      }
      if (v < 0) return imag_quadratic(-v);
      if (v > 1) return real_quadratic(v);
      throw ParseError("bad field: " + s);
    }
  }
  throw ParseError("unrecognized field: " + s);
}

long FieldDescriptor::s2() const {
  switch (kind) {
    case Kind::Rationals: return 0;
    case Kind::ImagQuadratic: return -d;
    case Kind::RealQuadratic: return d;
  }
  return 0;
}

bool FieldDescriptor::half_integral() const {
  return kind != Kind::Rationals && ((discriminant % 4) + 4) % 4 == 1;
}

bool FieldDescriptor::is_euclidean() const {
  if (kind == Kind::Rationals) return true;
  if (kind != Kind::ImagQuadratic) return false;
  return d == 1 || d == 2 || d == 3 || d == 7 || d == 11;
}

bool FieldDescriptor::supported_target() const {
  if (kind == Kind::Rationals) return true;
  if (kind != Kind::ImagQuadratic) return false;
  static const long ok[] = {1, 2, 3, 7, 11, 19, 43, 67, 163};
  return std::find(std::begin(ok), std::end(ok), d) != std::end(ok);
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::ImagQuadratic: return "Q(sqrt(-" + std::to_string(d) + "))";
    case Kind::RealQuadratic: return "Q(sqrt(" + std::to_string(d) + "))";
  }
  return "?";
}

int FieldDescriptor::galois_sign(long k) const {
  if (kind == Kind::Rationals) return 1;
  long r = ((k % conductor) + conductor) % conductor;
  return kronecker(discriminant, r);
}

QuadElem::QuadElem(Rational a, Rational b, long s2) : a_(std::move(a)), b_(std::move(b)), s2_(s2) {
  if (sgn(b_) == 0) s2_ = 0;
}

void QuadElem::join(long s2) {
  if (s2 == 0 || s2 == s2_) return;
  if (s2_ == 0) {
    s2_ = s2;
    return;
  }
  throw Error("mixing elements of different quadratic fields");
}

QuadElem QuadElem::sqrt_elem(const FieldDescriptor& K) {
  if (K.is_rationals()) throw Error("Q has no quadratic generator");
  return QuadElem(0, 1, K.s2());
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  join(o.s2_);
  a_ += o.a_;
  b_ += o.b_;
  if (sgn(b_) == 0) s2_ = 0;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  join(o.s2_);
  a_ -= o.a_;
  b_ -= o.b_;
  if (sgn(b_) == 0) s2_ = 0;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  if (sgn(o.b_) == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else if (sgn(b_) == 0) {
    Rational a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    s2_ = o.s2_;
  } else {
    join(o.s2_);
    Rational a = a_ * o.a_ + b_ * o.b_ * s2_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
  }
  if (sgn(b_) == 0) s2_ = 0;
  return *this;
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, s2_); }
QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, s2_); }
Rational QuadElem::norm() const { return a_ * a_ - b_ * b_ * s2_; }

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  return QuadElem(a_ / n, -b_ / n, s2_);
}

CycNum QuadElem::to_cyc(const FieldDescriptor& K) const {
  if (sgn(b_) == 0) return CycNum(a_);
  if (K.s2() != s2_) throw Error("element does not belong to " + K.name());
  return CycNum(a_) + K.sqrt_value.scaled(b_);
}

QuadElem QuadElem::from_cyc(const CycNum& z, const FieldDescriptor& K) {
  if (z.is_rational()) return QuadElem(z.rational_value());
  if (K.is_rationals()) throw Error("value " + z.str() + " is not rational");
  long L = std::lcm(static_cast<long>(z.order()), K.conductor);
  long tau = 0;
  for (long k = 2; k < L && tau == 0; ++k)
    if (std::gcd(k, L) == 1 && K.galois_sign(k) == -1) tau = k;
  CycNum zt = z.galois(tau);
  CycNum a = (z + zt).scaled(Rational(1, 2));
  CycNum bs = (z - zt).scaled(Rational(1, 2));
  CycNum b = (bs * K.sqrt_value).scaled(frac(1, K.s2()));
  if (!a.is_rational() || !b.is_rational()) throw Error("value " + z.str() + " is not in " + K.name());
  return QuadElem(a.rational_value(), b.rational_value(), K.s2());
}

std::pair<Rational, Rational> QuadElem::ring_coords(const FieldDescriptor& K) const {
  if (K.half_integral()) return {a_ - b_, 2 * b_};
  return {a_, b_};
}

bool QuadElem::is_integral(const FieldDescriptor& K) const {
  auto [x, y] = ring_coords(K);
  return x.get_den() == 1 && y.get_den() == 1;
}

std::int64_t QuadElem::reduce_mod(std::int64_t p, std::int64_t r) const {
  std::int64_t v = mod_p(a_, p);
  if (sgn(b_) != 0) v = (v + mod_p(b_, p) * r) % p;
  return v;
}

std::string QuadElem::str(const FieldDescriptor& K) const {
  if (is_zero()) return "0";
  if (sgn(b_) == 0) return to_string(a_);
  auto [x, y] = ring_coords(K);
  std::string s;
  if (sgn(x) != 0) s = to_string(x);
  if (sgn(y) != 0) {
    Rational ay = abs(y);
    if (s.empty())
      s = sgn(y) < 0 ? "-" : "";
    else
      s += sgn(y) < 0 ? " - " : " + ";
    if (ay != 1) s += to_string(ay) + "*";
    s += "w";
  }
  return s;
}

QuadElem QuadElem::parse(std::string_view in, const FieldDescriptor& K) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty field element");
  Rational x = 0, y = 0;
  for (const auto& [sign, term] : signed_terms(s)) {
    if (term.back() == 'w') {
      if (K.is_rationals()) throw ParseError("generator w used over Q: " + s);
      Rational c = 1;
      if (term.size() > 1) {
        if (term[term.size() - 2] != '*') throw ParseError("expected '*' before w: " + term);
        c = parse_rational(term.substr(0, term.size() - 2));
      }
      y += c * sign;
    } else {
      x += parse_rational(term) * sign;
    }
  }
  if (K.is_rationals()) return QuadElem(x);
  // Back from (1, omega) coordinates to (1, s).
  if (K.half_integral()) return QuadElem(x + y / 2, y / 2, K.s2());
  return QuadElem(x, y, K.s2());
}

CycNum galois_apply(const GaloisElement& s, const CycNum& a) {
  if (std::gcd(s.modulus, s.k) != 1) throw Error("Galois exponent not coprime to modulus");
  return a.galois(s.k);
}

bool subfield_membership(const CycNum& a, const FieldDescriptor& K) {
  if (a.is_rational()) return true;
  for (long k : galois_fixing(a.order(), K))
    if (k != 1 && a.galois(k) != a) return false;
  return true;
}

std::vector<long> galois_fixing(long N, const FieldDescriptor& K) {
  long L = std::lcm(N, K.conductor);
  std::set<long> out;
  for (long k = 1; k <= L; ++k)
    if (std::gcd(k, L) == 1 && K.galois_sign(k) == 1) out.insert(k % N);
  if (N == 1) return {0};
  return {out.begin(), out.end()};
}

CycNum rel_trace(const CycNum& a, long L, const FieldDescriptor& K) {
  if (L % a.order() != 0 || L % K.conductor != 0) throw Error("rel_trace: field does not contain inputs");
  CycNum acc;
  for (long k = 1; k <= L; ++k)
    if (std::gcd(k, L) == 1 && K.galois_sign(k) == 1) acc += a.galois(k);
  return acc;
}

std::int64_t sqrt_mod(std::int64_t s2, std::int64_t p) {
  std::int64_t v = ((s2 % p) + p) % p;
  for (std::int64_t r = 0; r < p; ++r)
    if (r * r % p == v) return r;
  return -1;
}

}  // namespace finmat
