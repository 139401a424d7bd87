#include "finmat/numbers/kmatrix.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace finmat {

namespace {

std::size_t hash_rational(const Rational& r) {
  std::size_t h = mpz_get_ui(r.get_num_mpz_t()) * 1000003u ^ mpz_get_ui(r.get_den_mpz_t());
  return sgn(r) < 0 ? ~h : h;
}

struct KMatrixHash {
  std::size_t operator()(const KMatrix& m) const { return m.hash(); }
};

}  // namespace

KMatrix::KMatrix(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

KMatrix KMatrix::identity(int n) {
  KMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

KMatrix KMatrix::from_rows(const std::vector<std::vector<QuadElem>>& rows) {
  KMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.c_) throw Error("ragged matrix");
    for (int j = 0; j < m.c_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.c_ != b.r_) throw Error("dimension mismatch");
  KMatrix r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const QuadElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw Error("dimension mismatch");
  KMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

KMatrix operator-(const KMatrix& a, const KMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw Error("dimension mismatch");
  KMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

bool operator<(const KMatrix& a, const KMatrix& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.c_ != b.c_) return a.c_ < b.c_;
  return a.e_ < b.e_;
}

KMatrix KMatrix::scaled(const QuadElem& s) const {
  KMatrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

KMatrix KMatrix::pow(long k) const {
  KMatrix base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  KMatrix r = identity(r_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool KMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != QuadElem(i == j ? 1 : 0)) return false;
  return true;
}

bool KMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const QuadElem& x) { return x.is_zero(); });
}

QuadElem KMatrix::trace() const {
  QuadElem t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

std::vector<int> rref(std::vector<std::vector<QuadElem>>& rows) {
  std::vector<int> piv;
  if (rows.empty()) return piv;
  const int nr = static_cast<int>(rows.size()), nc = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    QuadElem inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      QuadElem f = rows[i][c];
      for (int k = c; k < nc; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

int KMatrix::rank() const {
  std::vector<std::vector<QuadElem>> rows(r_, std::vector<QuadElem>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) rows[i][j] = at(i, j);
  return static_cast<int>(rref(rows).size());
}

std::vector<std::vector<QuadElem>> KMatrix::nullspace() const {
  std::vector<std::vector<QuadElem>> rows(r_, std::vector<QuadElem>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) rows[i][j] = at(i, j);
  auto piv = rref(rows);
  std::vector<bool> is_piv(c_, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<QuadElem>> out;
  for (int f = 0; f < c_; ++f) {
    if (is_piv[f]) continue;
    std::vector<QuadElem> v(c_);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

QuadElem KMatrix::det() const {
  if (r_ != c_) throw Error("det of non-square matrix");
  KMatrix a = *this;
  QuadElem d = 1;
  for (int c = 0; c < r_; ++c) {
    int p = -1;
    for (int i = c; i < r_; ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return QuadElem(0);
    if (p != c) {
      for (int j = 0; j < c_; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    QuadElem inv = a.at(c, c).inverse();
    for (int i = c + 1; i < r_; ++i) {
      if (a.at(i, c).is_zero()) continue;
      QuadElem f = a.at(i, c) * inv;
      for (int j = c; j < c_; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

KMatrix KMatrix::inverse() const {
  if (r_ != c_) throw Error("inverse of non-square matrix");
  std::vector<std::vector<QuadElem>> rows(r_, std::vector<QuadElem>(2 * c_));
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) rows[i][j] = at(i, j);
    rows[i][c_ + i] = 1;
  }
  auto piv = rref(rows);
  if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_) throw DivisionByZero();
  KMatrix inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = rows[i][c_ + j];
  return inv;
}

std::vector<QuadElem> KMatrix::charpoly() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const int n = r_;
  std::vector<QuadElem> c(n + 1);
  c[n] = 1;
  KMatrix M(n, n);
  for (int k = 1; k <= n; ++k) {
    M = *this * M;
    for (int i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
    c[n - k] = -((*this * M).trace() * QuadElem(Rational(1, k)));
  }
  c.pop_back();
  return c;
}

bool KMatrix::is_integral(const FieldDescriptor& K) const {
  return std::all_of(e_.begin(), e_.end(), [&](const QuadElem& x) { return x.is_integral(K); });
}

std::string KMatrix::str(const FieldDescriptor& K) const {
  std::vector<std::string> cells(e_.size());
  std::size_t w = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    cells[i] = e_[i].str(K);
    w = std::max(w, cells[i].size());
  }
  std::string s;
  for (int i = 0; i < r_; ++i) {
    s += "[";
    for (int j = 0; j < c_; ++j) {
      const auto& t = cells[static_cast<std::size_t>(i) * c_ + j];
      s += std::string(w - t.size() + (j ? 1 : 0), ' ') + t;
    }
    s += "]\n";
  }
  return s;
}

std::size_t KMatrix::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : e_) {
    h = (h ^ hash_rational(x.a())) * 1099511628211ull;
    h = (h ^ hash_rational(x.b())) * 1099511628211ull;
  }
  return h;
}

std::vector<KMatrix> kgroup_elements(const std::vector<KMatrix>& gens, long cap) {
  if (gens.empty()) throw Error("no generators");
  KMatrix id = KMatrix::identity(gens[0].rows());
  std::unordered_set<KMatrix, KMatrixHash> seen{id};
  std::vector<KMatrix> el{id};
  for (std::size_t i = 0; i < el.size(); ++i)
    for (const auto& g : gens) {
      KMatrix y = el[i] * g;
      if (seen.insert(y).second) {
        if (static_cast<long>(el.size()) >= cap) throw CapExceeded("matrix group exceeds cap");
        el.push_back(std::move(y));
      }
    }
  return el;
}

long kgroup_order(const std::vector<KMatrix>& gens, long cap) {
  return static_cast<long>(kgroup_elements(gens, cap).size());
}

}  // namespace finmat
