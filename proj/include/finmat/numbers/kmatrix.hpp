#pragma once

#include "finmat/numbers/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace finmat {

// Dense matrix over Q or a quadratic field, entries as QuadElem.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(int rows, int cols);
  static KMatrix identity(int n);
  static KMatrix from_rows(const std::vector<std::vector<QuadElem>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  QuadElem& at(int i, int j) { return e_[static_cast<std::size_t>(i) * c_ + j]; }
  const QuadElem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * c_ + j]; }

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b);
  KMatrix scaled(const QuadElem& s) const;
  KMatrix transpose() const;
  KMatrix pow(long k) const;
  friend bool operator==(const KMatrix& a, const KMatrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_; }
  friend bool operator!=(const KMatrix& a, const KMatrix& b) { return !(a == b); }
  friend bool operator<(const KMatrix& a, const KMatrix& b);

  bool is_identity() const;
  bool is_zero() const;
  QuadElem trace() const;
  QuadElem det() const;
  KMatrix inverse() const;  // throws DivisionByZero when singular
  int rank() const;
  // Basis of {x : A x = 0} as column vectors.
  std::vector<std::vector<QuadElem>> nullspace() const;
  // Coefficients c_0..c_{n-1} of det(x I - A) = x^n + sum c_k x^k.
  std::vector<QuadElem> charpoly() const;
  bool is_integral(const FieldDescriptor& K) const;

  std::string str(const FieldDescriptor& K) const;
  std::size_t hash() const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<QuadElem> e_;
};

// Row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<QuadElem>>& rows);

// Order of the group generated by gens, by exact closure.
long kgroup_order(const std::vector<KMatrix>& gens, long cap);
// All elements of the generated group, identity first.
std::vector<KMatrix> kgroup_elements(const std::vector<KMatrix>& gens, long cap);

}  // namespace finmat
