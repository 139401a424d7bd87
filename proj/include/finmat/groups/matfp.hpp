#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace finmat {

constexpr int kMaxDim = 6;

// n x n matrix over F_p, n <= kMaxDim, entries stored row-major.
struct MatFp {
  int p = 2;
  int n = 0;
  std::array<std::uint16_t, kMaxDim * kMaxDim> a{};

  MatFp() = default;
  MatFp(int p_, int n_) : p(p_), n(n_) {}
  static MatFp identity(int p, int n);
  static MatFp from_rows(int p, const std::vector<std::vector<long>>& rows);

  std::uint16_t& at(int i, int j) { return a[i * kMaxDim + j]; }
  std::uint16_t at(int i, int j) const { return a[i * kMaxDim + j]; }

  MatFp operator*(const MatFp& b) const;
  MatFp pow(long e) const;
  MatFp inverse() const;
  long det() const;
  long trace() const;
  // Coefficients c_0..c_{n-1} of det(xI - A) = x^n + c_{n-1}x^{n-1} + ... + c_0.
  std::vector<long> charpoly() const;
  bool is_identity() const;
  long order() const;  // multiplicative order
  std::string str() const;

  friend bool operator==(const MatFp& x, const MatFp& y) { return x.n == y.n && x.p == y.p && x.a == y.a; }
  friend bool operator!=(const MatFp& x, const MatFp& y) { return !(x == y); }
  friend bool operator<(const MatFp& x, const MatFp& y) { return x.a < y.a; }
  std::size_t hash() const;
};

struct MatFpHash {
  std::size_t operator()(const MatFp& m) const { return m.hash(); }
};

// Dense linear algebra over F_p; matrices are row vectors of residues.
namespace fp {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Mat& A, long p);
// Basis of {x : A x = 0}.
Mat nullspace(Mat A, long p, int ncols);
int rank(Mat A, long p);

}  // namespace fp

}  // namespace finmat
