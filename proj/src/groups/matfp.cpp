#include "finmat/groups/matfp.hpp"

#include "finmat/errors.hpp"
#include "finmat/numbers/rational.hpp"

#include <sstream>

namespace finmat {

MatFp MatFp::identity(int p, int n) {
  MatFp m(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatFp MatFp::from_rows(int p, const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n > kMaxDim) throw Error("matrix dimension too large");
  MatFp m(p, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error("matrix must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint16_t>(((rows[i][j] % p) + p) % p);
  }
  return m;
}

MatFp MatFp::operator*(const MatFp& b) const {
  MatFp c(p, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      unsigned x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) c.a[i * kMaxDim + j] = static_cast<std::uint16_t>((c.at(i, j) + x * b.at(k, j)) % p);
    }
  return c;
}

MatFp MatFp::pow(long e) const {
  MatFp r = identity(p, n), x = *this;
  if (e < 0) {
    x = inverse();
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

MatFp MatFp::inverse() const {
  fp::Mat A(n, fp::Vec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = at(i, j);
    A[i][n + i] = 1;
  }
  auto piv = fp::rref(A, p);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) throw Error("singular matrix mod p");
  MatFp r(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = static_cast<std::uint16_t>(A[i][n + j]);
  return r;
}

long MatFp::det() const {
  fp::Mat A(n, fp::Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = at(i, j);
  long d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      d = (p - d) % p;
    }
    d = d * A[c][c] % p;
    long inv = inv_mod(A[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (A[r][c] == 0) continue;
      long f = A[r][c] * inv % p;
      for (int k = c; k < n; ++k) A[r][k] = ((A[r][k] - f * A[c][k]) % p + p) % p;
    }
  }
  return d;
}

long MatFp::trace() const {
  long t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t % p;
}

std::vector<long> MatFp::charpoly() const {
  // Hessenberg reduction followed by the standard recurrence.
  std::vector<std::vector<long>> H(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H[i][j] = at(i, j);
  auto md = [this](long x) { return ((x % p) + p) % p; };
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (H[i][m - 1] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][m]);
    }
    long inv = inv_mod(H[m][m - 1], p);
    for (int i = m + 1; i < n; ++i) {
      long u = H[i][m - 1] * inv % p;
      if (u == 0) continue;
      for (int j = 0; j < n; ++j) H[i][j] = md(H[i][j] - u * H[m][j]);
      for (int j = 0; j < n; ++j) H[j][m] = md(H[j][m] + u * H[j][i]);
    }
  }
  // P_k(x) = (x - h_kk) P_{k-1} - sum_{i<k} h_ik * prod_{j=i+1}^{k} h_{j,j-1} * P_{i-1}
  std::vector<std::vector<long>> P(n + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<long> cur(k + 1, 0);
    for (int i = 0; i < static_cast<int>(P[k - 1].size()); ++i) {
      cur[i + 1] = md(cur[i + 1] + P[k - 1][i]);
      cur[i] = md(cur[i] - H[k - 1][k - 1] * P[k - 1][i]);
    }
    long prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = prod * H[i][i - 1] % p;
      long coef = H[i - 1][k - 1] * prod % p;
      if (coef == 0) continue;
      for (int j = 0; j < static_cast<int>(P[i - 1].size()); ++j) cur[j] = md(cur[j] - coef * P[i - 1][j]);
    }
    P[k] = std::move(cur);
  }
  return std::vector<long>(P[n].begin(), P[n].end() - 1);
}

bool MatFp::is_identity() const { return *this == identity(p, n); }

long MatFp::order() const {
  MatFp x = *this;
  long k = 1;
  while (!x.is_identity()) {
    x = x * *this;
    ++k;
    if (k > 100000000) throw Error("element order too large");
  }
  return k;
}

std::string MatFp::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t MatFp::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h ^= at(i, j);
      h *= 1099511628211ULL;
    }
  return static_cast<std::size_t>(h);
}

namespace fp {

std::vector<int> rref(Mat& A, long p) {
  std::vector<int> piv;
  if (A.empty()) return piv;
  int rows = static_cast<int>(A.size()), cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = r;
    while (pr < rows && A[pr][c] % p == 0) ++pr;
    if (pr == rows) continue;
    std::swap(A[pr], A[r]);
    long inv = inv_mod(A[r][c], p);
    for (int k = c; k < cols; ++k) A[r][k] = A[r][k] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      long f = A[i][c];
      for (int k = c; k < cols; ++k) A[i][k] = ((A[i][k] - f * A[r][k]) % p + p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

Mat nullspace(Mat A, long p, int ncols) {
  for (auto& row : A)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto piv = rref(A, p);
  std::vector<int> is_piv(ncols, -1);
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) is_piv[piv[i]] = i;
  Mat out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f] >= 0) continue;
    Vec v(ncols, 0);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) v[piv[i]] = (p - A[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

int rank(Mat A, long p) {
  for (auto& row : A)
    for (auto& x : row) x = ((x % p) + p) % p;
  return static_cast<int>(rref(A, p).size());
}

}  // namespace fp

}  // namespace finmat
