#pragma once

#include "finmat/numbers/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace finmat {

// Element of Q(zeta_N) stored in the Zumbroich basis of the minimal N.
// The stored form is canonical: equal numbers compare equal term by term.
class CycNum {
 public:
  using Term = std::pair<int, Rational>;

  CycNum() = default;
  CycNum(long v);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& v);  // NOLINT(google-explicit-constructor)

  // zeta_N^k with zeta_N = exp(2 pi i / N).
  static CycNum zeta(int N, long k = 1);
  // Builds sum_k c[k] zeta_N^k from an arbitrary coefficient vector of length N.
  static CycNum from_powers(int N, std::vector<Rational> c);
  static CycNum parse(std::string_view s);
  // Zumbroich basis exponents for Q(zeta_N), increasing.
  static std::vector<int> basis(int N);

  int order() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // throws unless rational
  bool is_integral_coords() const;  // integer coordinates in the basis

  // sigma_k : zeta_M -> zeta_M^k for any M divisible by order(); k coprime to order().
  CycNum galois(long k) const;
  CycNum conj() const { return galois(-1); }
  CycNum inverse() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator/=(const CycNum& b);
  CycNum operator-() const;
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  // Multiplication by zeta_N^k, cheaper than a general product.
  CycNum times_zeta(int N, long k) const;
  CycNum scaled(const Rational& r) const;

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  // Arbitrary but fixed total order used for canonical sorting.
  friend bool operator<(const CycNum& a, const CycNum& b);

  // Image in F_ell under zeta_e -> z, where z has multiplicative order e and order() | e.
  std::int64_t eval_mod(std::int64_t ell, std::int64_t z, int e) const;

  std::string str() const;
  std::size_t hash() const;
  // Debug printer only; never used in exact logic.
  std::complex<double> approx() const;

 private:
  int n_ = 1;
  std::vector<Term> t_;
};

CycNum cyc_arith(const CycNum& a, const CycNum& b, char op);

struct CycNumHash {
  std::size_t operator()(const CycNum& a) const { return a.hash(); }
};

}  // namespace finmat
