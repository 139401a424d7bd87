#pragma once

// Independent oracles shared by the unit and acceptance suites.

#include "finmat/chars/char_table.hpp"
#include "finmat/groups/finite_group.hpp"
#include "finmat/groups/matfp.hpp"
#include "finmat/groups/subgroups.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace finmat::oracle {

// Element set of the closure, as a sorted vector.
inline std::vector<MatFp> closure(const std::vector<MatFp>& gens) {
  std::set<MatFp> s{MatFp::identity(gens[0].p, gens[0].n)};
  std::vector<MatFp> todo(s.begin(), s.end());
  while (!todo.empty()) {
    MatFp x = todo.back();
    todo.pop_back();
    for (const auto& g : gens)
      if (s.insert(x * g).second) todo.push_back(x * g);
  }
  return {s.begin(), s.end()};
}

// Conjugacy classes of subgroups with at most two generators, by brute force.
inline int brute_subgroup_classes(int n, int q, long bound) {
  auto G = general_linear_group(n, q);
  std::set<std::vector<MatFp>> subs;
  for (const auto& a : G)
    for (const auto& b : G) {
      if (b < a) continue;
      auto s = closure({a, b});
      if (bound % static_cast<long>(s.size()) == 0) subs.insert(s);
    }
  std::set<std::vector<MatFp>> seen;
  int classes = 0;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (const auto& x : G) {
      MatFp xi = x.inverse();
      std::vector<MatFp> t;
      for (const auto& h : s) t.push_back(x * h * xi);
      std::sort(t.begin(), t.end());
      seen.insert(t);
    }
  }
  return classes;
}

// Regular-module check: each row gives an idempotent of trace chi(1)^2, the idempotents
// are orthogonal and sum to the identity.
inline bool regular_oracle(const FiniteGroup& G, const CharacterTable& T) {
  const int n = G.order();
  using Mat = std::vector<std::vector<CycNum>>;
  std::vector<Mat> P;
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    Mat m(n, std::vector<CycNum>(n));
    Rational f = frac(T.degrees[i], n);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) m[y][x] = T.rows[i].values[G.class_of(G.mul(y, G.inv(x)))].conj().scaled(f);
    P.push_back(std::move(m));
  }
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat r(n, std::vector<CycNum>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  Mat sum(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (mul(P[i], P[i]) != P[i]) return false;
    CycNum tr;
    for (int x = 0; x < n; ++x) tr += P[i][x][x];
    if (tr != CycNum(static_cast<long>(T.degrees[i]) * T.degrees[i])) return false;
    if (i + 1 < P.size() && !mul(P[i], P[i + 1]).empty()) {
      auto z = mul(P[i], P[i + 1]);
      for (auto& row : z)
        for (auto& v : row)
          if (!v.is_zero()) return false;
    }
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) sum[y][x] += P[i][y][x];
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (sum[y][x] != CycNum(y == x ? 1 : 0)) return false;
  return true;
}

inline CycNum token(const std::string& t) {
  const CycNum z = CycNum::zeta(3);
  if (t == "z") return z;
  if (t == "-z") return -z;
  if (t == "z+1") return z + CycNum(1);
  if (t == "-z-1") return -z - CycNum(1);
  return CycNum(std::stol(t));
}

inline std::vector<std::vector<CycNum>> parse_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<CycNum>> out;
  for (const auto& r : rows) {
    std::istringstream in(r);
    std::vector<CycNum> v;
    for (std::string t; in >> t;) v.push_back(token(t));
    out.push_back(v);
  }
  return out;
}

// Reference table of C2 x SL(2,3) with zeta = exp(2 pi i / 3).
inline const std::vector<std::string> kRefTable = {
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1",
    "1 -1 -1 1 1 1 1 -1 1 -1 -1 -1 -1 1",
    "1 1 1 1 -z-1 z 1 1 -z-1 z -z-1 z -z-1 z",
    "1 1 1 1 z -z-1 1 1 z -z-1 z -z-1 z -z-1",
    "1 -1 -1 1 z -z-1 1 -1 z z+1 -z z+1 -z -z-1",
    "1 -1 -1 1 -z-1 z 1 -1 -z-1 -z z+1 -z z+1 z",
    "2 2 -2 -2 -1 -1 0 0 1 1 1 -1 -1 1",
    "2 -2 2 -2 -1 -1 0 0 1 -1 -1 1 1 1",
    "2 -2 2 -2 z+1 -z 0 0 -z-1 -z z+1 z -z-1 z",
    "2 2 -2 -2 -z z+1 0 0 z -z-1 z z+1 -z -z-1",
    "2 2 -2 -2 z+1 -z 0 0 -z-1 z -z-1 -z z+1 z",
    "2 -2 2 -2 -z z+1 0 0 z z+1 -z -z-1 z -z-1",
    "3 -3 -3 3 0 0 -1 1 0 0 0 0 0 0",
    "3 3 3 3 0 0 -1 -1 0 0 0 0 0 0",
};

// C2 x SL(2,3) inside GL_3(F_3).
inline FiniteGroup c2_sl23() {
  auto a = MatFp::from_rows(3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  auto b = MatFp::from_rows(3, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  auto c = MatFp::from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  return FiniteGroup::from_matrices({a, b, c});
}

}  // namespace finmat::oracle
