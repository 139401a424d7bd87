#pragma once

#include "finmat/numbers/cyclotomic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace finmat {

struct FieldDescriptor {
  enum class Kind { Rationals, ImagQuadratic, RealQuadratic };

  Kind kind = Kind::Rationals;
  long d = 0;             // Q(sqrt(-d)) or Q(sqrt(d)); 0 for Q
  long discriminant = 1;  // fundamental discriminant D
  long conductor = 1;     // |D|
  CycNum ring_generator = CycNum(1);
  CycNum sqrt_value = CycNum(1);  // sqrt(D') with D' = -d or d, as a Gauss-sum combination

  static FieldDescriptor rationals();
  static FieldDescriptor imag_quadratic(long d);
  static FieldDescriptor real_quadratic(long d);
  // Accepts "Q", "Q(sqrt(-D))", "Q(i)" and "Q(sqrt(D))".
  static FieldDescriptor parse(std::string_view s);

  int degree() const { return kind == Kind::Rationals ? 1 : 2; }
  bool is_rationals() const { return kind == Kind::Rationals; }
  // Square of the stored square root: -d, d, or 0 for Q.
  long s2() const;
  // Whether omega = (1 + sqrt)/2 generates the ring of integers.
  bool half_integral() const;
  bool contains_i() const { return kind == Kind::ImagQuadratic && d == 1; }
  bool is_euclidean() const;
  bool supported_target() const;
  std::string name() const;
  // Value of the quadratic character attached to K at k (1 for Q); k coprime to conductor.
  int galois_sign(long k) const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.d == b.d;
  }
};

// Element a + b*s of a quadratic field with s^2 = s2 (s2 = 0 marks a plain rational).
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational a, Rational b, long s2);

  static QuadElem sqrt_elem(const FieldDescriptor& K);
  static QuadElem from_cyc(const CycNum& z, const FieldDescriptor& K);
  // Parses "x + y*w" with w the ring generator of K.
  static QuadElem parse(std::string_view s, const FieldDescriptor& K);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long s2() const { return s2_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  QuadElem conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * a_; }
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }
  QuadElem operator-() const;
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }
  friend bool operator<(const QuadElem& x, const QuadElem& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

  CycNum to_cyc(const FieldDescriptor& K) const;
  // Coordinates (x, y) with the element equal to x + y*omega.
  std::pair<Rational, Rational> ring_coords(const FieldDescriptor& K) const;
  bool is_integral(const FieldDescriptor& K) const;
  // Image in O_K / p for a split or rational prime p, with s mapped to the residue r.
  std::int64_t reduce_mod(std::int64_t p, std::int64_t r) const;
  std::string str(const FieldDescriptor& K) const;

 private:
  void join(long s2);
  Rational a_;
  Rational b_;
  long s2_ = 0;
};

struct GaloisElement {
  long modulus = 1;
  long k = 1;
};

CycNum galois_apply(const GaloisElement& s, const CycNum& a);
bool subfield_membership(const CycNum& a, const FieldDescriptor& K);
// Trace from Q(zeta_L) down to K.
CycNum rel_trace(const CycNum& a, long L, const FieldDescriptor& K);
// Residues k mod N (coprime to N) such that sigma_k extends to an automorphism fixing K.
std::vector<long> galois_fixing(long N, const FieldDescriptor& K);
// A square root of s2 modulo p (smallest representative), or -1 if none.
std::int64_t sqrt_mod(std::int64_t s2, std::int64_t p);

}  // namespace finmat
