#include "finmat/realize/structure.hpp"

#include "finmat/groups/search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

namespace finmat {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

long smallest_prime_1_mod(long n) {
  for (long p = n + 1;; p += n) {
    if (p < 3) continue;
    bool prime = true;
    for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) return p;
  }
}

long root_of_unity(long p, long n) {
  // Element of exact order n in F_p^*, n | p - 1.
  auto pw = [p](long a, long e) {
    long r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  auto pf = prime_factors(n);
  for (long g = 2; g < p; ++g) {
    long z = pw(g, (p - 1) / n);
    bool exact = true;
    for (long q : pf) exact = exact && pw(z, n / q) != 1;
    if (exact) return z;
  }
  return 1;
}

FiniteGroup dihedral(long n) {
  long p = smallest_prime_1_mod(n), z = root_of_unity(p, n), zi = 1;
  while (z * zi % p != 1) ++zi;
  int P = static_cast<int>(p);
  return FiniteGroup::from_matrices({MatFp::from_rows(P, {{z, 0}, {0, zi}}), MatFp::from_rows(P, {{0, 1}, {1, 0}})});
}

FiniteGroup dicyclic(long k) {
  long p = smallest_prime_1_mod(2 * k), z = root_of_unity(p, 2 * k), zi = 1;
  while (z * zi % p != 1) ++zi;
  int P = static_cast<int>(p);
  return FiniteGroup::from_matrices(
      {MatFp::from_rows(P, {{z, 0}, {0, zi}}), MatFp::from_rows(P, {{0, p - 1}, {1, 0}})});
}

FiniteGroup perm4(bool alternating) {
  auto perm = [](std::vector<int> img) {
    std::vector<std::vector<long>> rows(4, std::vector<long>(4, 0));
    for (int i = 0; i < 4; ++i) rows[img[i]][i] = 1;
    return MatFp::from_rows(3, rows);
  };
  if (alternating) return FiniteGroup::from_matrices({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
  return FiniteGroup::from_matrices({perm({1, 2, 3, 0}), perm({1, 0, 2, 3})});
}

struct Named {
  long order;
  std::string name;
  std::function<FiniteGroup()> make;
};

const std::vector<Named>& library() {
  static const std::vector<Named> lib = [] {
    std::vector<Named> v;
    for (long n = 3; n <= 96; ++n)
      v.push_back({2 * n, n == 3 ? "S3" : "D" + std::to_string(n), [n] { return dihedral(n); }});
    for (long k = 2; k <= 48; ++k) {
      std::string name = "Dic" + std::to_string(k);
      if (k == 2) name = "Q8";
      if (k == 3) name = "C3:C4";
      if ((k & (k - 1)) == 0 && k >= 4) name = "Q" + std::to_string(4 * k);
      v.push_back({4 * k, name, [k] { return dicyclic(k); }});
    }
    v.push_back({12, "A4", [] { return perm4(true); }});
    v.push_back({24, "S4", [] { return perm4(false); }});
    v.push_back({24, "SL(2,3)", [] {
                   return FiniteGroup::from_matrices(
                       {MatFp::from_rows(3, {{1, 1}, {0, 1}}), MatFp::from_rows(3, {{1, 0}, {1, 1}})});
                 }});
    v.push_back({48, "GL(2,3)", [] {
                   return FiniteGroup::from_matrices({MatFp::from_rows(3, {{1, 1}, {0, 1}}),
                                                      MatFp::from_rows(3, {{1, 0}, {1, 1}}),
                                                      MatFp::from_rows(3, {{2, 0}, {0, 1}})});
                 }});
    v.push_back({168, "GL(3,2)", [] {
                   return FiniteGroup::from_matrices({MatFp::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                                      MatFp::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})});
                 }});
    return v;
  }();
  return lib;
}

std::vector<int> normal_closure_join(const FiniteGroup& G, const std::vector<int>& N, int cls) {
  std::vector<int> gens = N;
  for (int x : G.classes()[cls].members) gens.push_back(x);
  return G.subgroup_elements(gens);
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> todo{{0}};
  while (!todo.empty()) {
    auto N = todo.back();
    todo.pop_back();
    for (int c = 1; c < G.num_classes(); ++c) {
      if (std::binary_search(N.begin(), N.end(), G.classes()[c].rep)) continue;
      auto M = normal_closure_join(G, N, c);
      if (seen.insert(M).second) todo.push_back(M);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> subgroups_of_abelian(const FiniteGroup& G, const std::vector<int>& Z) {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> todo{{0}};
  while (!todo.empty()) {
    auto H = todo.back();
    todo.pop_back();
    for (int z : Z) {
      if (std::binary_search(H.begin(), H.end(), z)) continue;
      auto g = H;
      g.push_back(z);
      auto M = G.subgroup_elements(g);
      if (seen.insert(M).second) todo.push_back(M);
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup as_group(const FiniteGroup& G, const std::vector<int>& elems) {
  return G.restrict_to(elems, elems);
}

std::string fallback(const FiniteGroup& G) {
  auto inv = iso_invariants(G);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](long v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(inv.order);
  mix(inv.exponent);
  mix(inv.center_order);
  for (int x : inv.abelianization) mix(x);
  for (int x : inv.class_sizes) mix(x);
  for (auto [o, c] : inv.order_histogram) {
    mix(o);
    mix(c);
  }
  for (int x : inv.derived_series) mix(x);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06llx", static_cast<unsigned long long>(h & 0xffffff));
  return "G" + std::to_string(G.order()) + "-" + buf;
}

}  // namespace

std::vector<long> abelian_invariants(const FiniteGroup& A) {
  long n = A.order();
  // Per prime: |A[p^j]| = p^(sum_i min(j, e_i)) determines the exponents e_i.
  std::vector<std::vector<int>> parts;
  for (long p : prime_factors(n)) {
    std::vector<long> cnt;  // cnt[j] = log_p |A[p^j]|
    long pj = 1;
    for (int j = 0;; ++j) {
      long c = 0;
      for (int x = 0; x < n; ++x)
        if (pj % A.elem_order(x) == 0) ++c;
      int lg = 0;
      while (c > 1) {
        c /= p;
        ++lg;
      }
      cnt.push_back(lg);
      if (j > 0 && cnt[j] == cnt[j - 1]) break;
      pj *= p;
    }
    // Number of cyclic factors of exponent >= j is cnt[j] - cnt[j-1].
    std::vector<int> exps;
    for (std::size_t j = 1; j < cnt.size(); ++j) {
      long ge = cnt[j] - cnt[j - 1];
      long ge_next = j + 1 < cnt.size() ? cnt[j + 1] - cnt[j] : 0;
      for (long t = 0; t < ge - ge_next; ++t) exps.push_back(static_cast<int>(j));
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    std::vector<int> pe;
    for (int e : exps) {
      long v = 1;
      for (int k = 0; k < e; ++k) v *= p;
      pe.push_back(static_cast<int>(v));
    }
    parts.push_back(pe);
  }
  std::size_t len = 0;
  for (const auto& p : parts) len = std::max(len, p.size());
  std::vector<long> inv(len, 1);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) inv[len - 1 - i] *= p[i];
  return inv;
}

std::string abelian_label(const std::vector<long>& invariants) {
  if (invariants.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size();) {
    std::size_t j = i;
    while (j < invariants.size() && invariants[j] == invariants[i]) ++j;
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(invariants[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string iso_label(const FiniteGroup& G) {
  if (G.is_abelian()) return abelian_label(abelian_invariants(G));
  for (const auto& e : library())
    if (e.order == G.order() && are_isomorphic(G, e.make())) return e.name;
  // Largest central subgroup with a normal complement.
  auto Z = G.center();
  if (Z.size() > 1) {
    auto normals = normal_subgroups(G);
    auto cs = subgroups_of_abelian(G, Z);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& C : cs) {
      if (C.size() == 1 || C.size() == static_cast<std::size_t>(G.order())) continue;
      for (const auto& N : normals) {
        if (N.size() * C.size() != static_cast<std::size_t>(G.order())) continue;
        std::vector<int> meet;
        std::set_intersection(C.begin(), C.end(), N.begin(), N.end(), std::back_inserter(meet));
        if (meet.size() != 1) continue;
        return abelian_label(abelian_invariants(as_group(G, C))) + "x" + iso_label(as_group(G, N));
      }
    }
  }
  return fallback(G);
}

}  // namespace finmat
