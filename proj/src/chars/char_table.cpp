#include "finmat/chars/char_table.hpp"

#include "finmat/errors.hpp"
#include "finmat/numbers/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace finmat {

namespace {

using Vec = std::vector<long>;

long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

// Row-reduced basis of a subspace of F_ell^c: rows with pivot columns.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<int> pivots;
};

Subspace reduce_rows(std::vector<Vec> rows, long p) {
  Subspace S;
  if (rows.empty()) return S;
  int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    long inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      long f = rows[i][c];
      for (int k = 0; k < ncols; ++k) rows[i][k] = md(rows[i][k] - f * rows[r][k], p);
    }
    S.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  S.rows = std::move(rows);
  return S;
}

// Nullspace of a d x d matrix over F_p, as coefficient vectors.
std::vector<Vec> nullspace_sq(std::vector<Vec> A, long p) {
  int d = static_cast<int>(A.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < d && r < d; ++c) {
    int piv = -1;
    for (int i = r; i < d; ++i)
      if (A[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    long inv = inv_mod(A[r][c], p);
    for (auto& x : A[r]) x = x * inv % p;
    for (int i = 0; i < d; ++i) {
      if (i == r || A[i][c] == 0) continue;
      long f = A[i][c];
      for (int k = 0; k < d; ++k) A[i][k] = md(A[i][k] - f * A[r][k], p);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  std::vector<bool> is_piv(d, false);
  for (int c : pivcol) is_piv[c] = true;
  for (int f = 0; f < d; ++f) {
    if (is_piv[f]) continue;
    Vec v(d, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = md(-A[i][f], p);
    out.push_back(v);
  }
  return out;
}

}  // namespace

long dixon_prime(long order, long e) {
  long ell = e + 1;
  while (!(is_prime(ell) && static_cast<double>(ell) > 2.0 * std::sqrt(static_cast<double>(order)))) ell += e;
  return ell;
}

CharacterTable character_table(const FiniteGroup& G, int cap) {
  if (G.order() > cap) throw CapExceeded("group too large for character table");
  CharacterTable T;
  T.group_order = G.order();
  T.exponent = G.exponent();
  const int c = G.num_classes();
  const int e = T.exponent;
  for (const auto& cl : G.classes()) T.classes.push_back({cl.rep, static_cast<int>(cl.members.size()), cl.order});
  T.power.assign(c, std::vector<int>(e));
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < e; ++k) T.power[i][k] = G.power_class(i, k);

  const long ell = dixon_prime(G.order(), e);
  const long z = pow_mod(primitive_root(ell), (ell - 1) / e, ell);

  // Class multiplication coefficients: M_j[k][l] = #{x in C_j : x^-1 g_l in C_k}.
  auto class_matrix = [&](int j) {
    std::vector<Vec> M(c, Vec(c, 0));
    for (int l = 0; l < c; ++l) {
      int gl = T.classes[l].rep;
      for (int x : G.classes()[j].members) ++M[G.class_of(G.mul(G.inv(x), gl))][l];
    }
    for (auto& row : M)
      for (auto& v : row) v %= ell;
    return M;
  };

  std::vector<Subspace> spaces;
  {
    std::vector<Vec> id(c, Vec(c, 0));
    for (int i = 0; i < c; ++i) id[i][i] = 1;
    spaces.push_back(reduce_rows(id, ell));
  }
  // Split by class matrices, largest classes first: they separate quickest as a rule.
  std::vector<int> order_j(c);
  for (int i = 0; i < c; ++i) order_j[i] = i;
  std::stable_sort(order_j.begin(), order_j.end(),
                   [&](int a, int b) { return T.classes[a].size > T.classes[b].size; });
  for (int j : order_j) {
    if (static_cast<int>(spaces.size()) == c) break;
    if (T.classes[j].size == 1 && j == 0) continue;
    auto M = class_matrix(j);
    std::vector<Subspace> next;
    for (auto& W : spaces) {
      int d = static_cast<int>(W.rows.size());
      if (d == 1) {
        next.push_back(std::move(W));
        continue;
      }
      // Matrix of M on W in row coordinates: vectors are rows v, action v -> (M v^T)^T.
      std::vector<Vec> img(d, Vec(c, 0));
      for (int a = 0; a < d; ++a)
        for (int k = 0; k < c; ++k) {
          long s = 0;
          for (int l = 0; l < c; ++l) s += M[k][l] * W.rows[a][l];
          img[a][k] = s % ell;
        }
      // coordinates of img[a] in W: values at pivot columns.
      std::vector<Vec> R(d, Vec(d, 0));  // R[a][b]: coefficient of basis b in img[a]
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) R[a][b] = img[a][W.pivots[b]];
      int found = 0;
      for (long lam = 0; lam < ell && found < d; ++lam) {
        // Left kernel of R - lam: coefficient rows y with y (R - lam) = 0.
        std::vector<Vec> A(d, Vec(d, 0));
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) A[b][a] = md(R[a][b] - (a == b ? lam : 0), ell);
        auto ker = nullspace_sq(A, ell);
        if (ker.empty()) continue;
        std::vector<Vec> vs;
        for (const auto& y : ker) {
          Vec v(c, 0);
          for (int a = 0; a < d; ++a)
            if (y[a])
              for (int k = 0; k < c; ++k) v[k] = (v[k] + y[a] * W.rows[a][k]) % ell;
          vs.push_back(v);
        }
        found += static_cast<int>(vs.size());
        next.push_back(reduce_rows(vs, ell));
      }
      if (found != d) throw InvariantViolation("class matrix not diagonalizable mod ell");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != c) throw InvariantViolation("class matrices do not separate characters");

  std::vector<Vec> modular(c);
  for (int i = 0; i < c; ++i) {
    Vec w = spaces[i].rows[0];
    if (w[0] == 0) throw InvariantViolation("eigenvector vanishing at the identity");
    long inv = inv_mod(w[0], ell);
    for (auto& x : w) x = x * inv % ell;
    // chi(1)^2 = |G| / sum_l w_l w_l' / |C_l|.
    long s = 0;
    for (int l = 0; l < c; ++l)
      s = (s + w[l] * w[T.inverse_class(l)] % ell * inv_mod(T.classes[l].size, ell)) % ell;
    long deg2 = G.order() % ell * inv_mod(s, ell) % ell;
    long deg = -1;
    for (long d = 1; d * d <= G.order(); ++d)
      if (d * d % ell == deg2) deg = d;
    if (deg < 0) throw InvariantViolation("degree lift failed");
    Vec chi(c);
    for (int l = 0; l < c; ++l) chi[l] = w[l] * deg % ell * inv_mod(T.classes[l].size, ell) % ell;
    modular[i] = chi;
  }

  // Lift through eigenvalue multiplicities on each class.
  struct Row {
    Character ch;
    int deg;
    std::vector<std::vector<int>> eig;
  };
  std::vector<Row> rows;
  for (int i = 0; i < c; ++i) {
    Row r;
    r.deg = static_cast<int>(modular[i][0]);
    for (int l = 0; l < c; ++l) {
      int o = T.classes[l].order;
      long w = pow_mod(z, e / o, ell);
      long oinv = inv_mod(o, ell);
      std::vector<int> mult(o);
      std::vector<Rational> coeffs(o);
      int total = 0;
      for (int k = 0; k < o; ++k) {
        long s = 0;
        for (int j = 0; j < o; ++j)
          s = (s + modular[i][T.power[l][j % e]] * pow_mod(w, md(-static_cast<long>(j) * k, o), ell)) % ell;
        long m = s * oinv % ell;
        if (m > r.deg) throw InvariantViolation("eigenvalue multiplicity out of range");
        mult[k] = static_cast<int>(m);
        coeffs[k] = m;
        total += static_cast<int>(m);
      }
      if (total != r.deg) throw InvariantViolation("eigenvalue multiplicities do not sum to degree");
      r.ch.values.push_back(CycNum::from_powers(o, coeffs));
      r.eig.push_back(std::move(mult));
    }
    rows.push_back(std::move(r));
  }
  // Trivial first, then by degree and values.
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    bool ta = a.deg == 1 && std::all_of(a.ch.values.begin(), a.ch.values.end(), [](const CycNum& v) { return v == CycNum(1); });
    bool tb = b.deg == 1 && std::all_of(b.ch.values.begin(), b.ch.values.end(), [](const CycNum& v) { return v == CycNum(1); });
    if (ta != tb) return ta;
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.ch < b.ch;
  });
  for (auto& r : rows) {
    T.rows.push_back(std::move(r.ch));
    T.degrees.push_back(r.deg);
    T.eigen.push_back(std::move(r.eig));
  }
  if (!verify_table(T)) throw InvariantViolation("character table fails orthogonality");
  return T;
}

CycNum inner(const CharacterTable& T, const Character& f, const Character& h) {
  CycNum s;
  for (int l = 0; l < T.num_classes(); ++l) s += (f.values[l] * h.values[l].conj()).scaled(T.classes[l].size);
  return s.scaled(frac(1, T.group_order));
}

bool verify_table(const CharacterTable& T) {
  const int c = T.num_classes();
  if (static_cast<int>(T.rows.size()) != c) return false;
  long sq = 0;
  for (int d : T.degrees) sq += static_cast<long>(d) * d;
  if (sq != T.group_order) return false;
  for (int i = 0; i < c; ++i)
    for (int j = i; j < c; ++j)
      if (inner(T, T.rows[i], T.rows[j]) != CycNum(i == j ? 1 : 0)) return false;
  for (int a = 0; a < c; ++a)
    for (int b = a; b < c; ++b) {
      CycNum s;
      for (int i = 0; i < c; ++i) s += T.rows[i].values[a] * T.rows[i].values[b].conj();
      CycNum want = a == b ? CycNum(T.group_order / T.classes[a].size) : CycNum(0);
      if (s != want) return false;
    }
  return true;
}

}  // namespace finmat

namespace finmat {

std::optional<std::vector<int>> match_tables(const std::vector<std::vector<CycNum>>& A,
                                             const std::vector<std::vector<CycNum>>& B) {
  const std::size_t r = A.size();
  if (B.size() != r) return std::nullopt;
  if (r == 0) return std::vector<int>{};
  const std::size_t c = A[0].size();
  if (B[0].size() != c) return std::nullopt;
  auto column = [](const std::vector<std::vector<CycNum>>& T, std::size_t j) {
    std::vector<CycNum> v;
    for (const auto& row : T) v.push_back(row[j]);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<CycNum>> ca(c), cb(c);
  for (std::size_t j = 0; j < c; ++j) {
    ca[j] = column(A, j);
    cb[j] = column(B, j);
  }
  std::vector<int> perm(c, -1);
  std::vector<bool> used(c, false);
  // Row prefixes compare as multisets after each assignment.
  std::function<bool(std::size_t)> rec = [&](std::size_t j) {
    if (j == c) return true;
    for (std::size_t k = 0; k < c; ++k) {
      if (used[k] || ca[j] != cb[k]) continue;
      perm[j] = static_cast<int>(k);
      std::vector<std::vector<CycNum>> pa(r), pb(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t <= j; ++t) {
          pa[i].push_back(A[i][t]);
          pb[i].push_back(B[i][perm[t]]);
        }
      std::sort(pa.begin(), pa.end());
      std::sort(pb.begin(), pb.end());
      if (pa != pb) continue;
      used[k] = true;
      if (rec(j + 1)) return true;
      used[k] = false;
    }
    perm[j] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return perm;
}

}  // namespace finmat
