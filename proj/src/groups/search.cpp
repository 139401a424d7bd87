#include "finmat/groups/search.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace finmat {

namespace {

using Sig = std::tuple<int, int, long>;

Sig signature(const FiniteGroup& G, int x, const std::vector<long>* col) {
  return {G.elem_order(x), static_cast<int>(G.classes()[G.class_of(x)].members.size()), col ? (*col)[x] : 0L};
}

struct IsoSearch {
  const FiniteGroup& A;
  const FiniteGroup& B;
  const std::vector<long>* colA;
  const std::vector<long>* colB;
  const std::function<bool(const std::vector<int>&)>& cb;
  std::vector<int> seq;
  std::vector<int> img;
  std::vector<std::vector<int>> cands;
  std::vector<int> phi;
  std::vector<char> used;
  bool stop = false;

  bool extend(int level) {
    std::fill(phi.begin(), phi.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (int j = 0; j <= level; ++j) {
        int y = A.mul(x, seq[j]);
        int iy = B.mul(phi[x], img[j]);
        if (phi[y] >= 0) {
          if (phi[y] != iy) return false;
          continue;
        }
        if (used[iy] || A.elem_order(y) != B.elem_order(iy)) return false;
        if (colA && (*colA)[y] != (*colB)[iy]) return false;
        phi[y] = iy;
        used[iy] = 1;
        queue.push_back(y);
      }
    }
    return true;
  }

  void run(int level) {
    for (int c : cands[level]) {
      if (stop) return;
      img[level] = c;
      if (!extend(level)) continue;
      if (level + 1 == static_cast<int>(seq.size())) {
        if (!cb(phi)) stop = true;
      } else {
        run(level + 1);
      }
    }
  }
};

}  // namespace

std::vector<int> generating_sequence(const FiniteGroup& G) {
  int n = G.order();
  std::map<std::pair<int, int>, int> rarity;
  for (int x = 0; x < n; ++x) ++rarity[{G.elem_order(x), static_cast<int>(G.classes()[G.class_of(x)].members.size())}];
  std::vector<int> seq;
  std::vector<int> S{0};
  while (static_cast<int>(S.size()) < n) {
    std::vector<char> inS(n, 0);
    for (int s : S) inS[s] = 1;
    int best = -1;
    std::tuple<int, int, int> best_key;
    std::vector<int> bestS;
    for (int x = 1; x < n; ++x) {
      if (inS[x]) continue;
      std::vector<int> gens = seq;
      gens.push_back(x);
      auto T = G.subgroup_elements(gens);
      int r = rarity[{G.elem_order(x), static_cast<int>(G.classes()[G.class_of(x)].members.size())}];
      auto key = std::make_tuple(-static_cast<int>(T.size()), r, x);
      if (best < 0 || key < best_key) {
        best = x;
        best_key = key;
        bestS = std::move(T);
      }
    }
    seq.push_back(best);
    S = std::move(bestS);
  }
  return seq;
}

void for_each_isomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<long>* colA,
                          const std::vector<long>* colB,
                          const std::function<bool(const std::vector<int>&)>& cb) {
  if (A.order() != B.order()) return;
  if ((colA == nullptr) != (colB == nullptr)) throw Error("isomorphism search: colors on one side only");
  if (A.order() == 1) {
    cb(std::vector<int>{0});
    return;
  }
  IsoSearch s{A, B, colA, colB, cb, generating_sequence(A), {}, {}, {}, {}};
  s.img.assign(s.seq.size(), 0);
  s.phi.assign(A.order(), -1);
  s.used.assign(B.order(), 0);
  std::map<Sig, std::vector<int>> bysig;
  for (int y = 0; y < B.order(); ++y) bysig[signature(B, y, colB)].push_back(y);
  for (std::size_t i = 0; i < s.seq.size(); ++i) {
    auto it = bysig.find(signature(A, s.seq[i], colA));
    std::vector<int> c;
    if (it != bysig.end()) {
      for (int y : it->second)
        if (i > 0 || B.classes()[B.class_of(y)].rep == y) c.push_back(y);
    }
    if (c.empty()) return;
    s.cands.push_back(std::move(c));
  }
  s.run(0);
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B,
                                                 const std::vector<long>* colA, const std::vector<long>* colB) {
  if (A.order() != B.order()) return std::nullopt;
  if (colA == nullptr && !(iso_invariants(A) == iso_invariants(B))) return std::nullopt;
  if (colA) {
    std::multiset<std::pair<int, long>> ha, hb;
    for (int x = 0; x < A.order(); ++x) ha.insert({A.elem_order(x), (*colA)[x]});
    for (int x = 0; x < B.order(); ++x) hb.insert({B.elem_order(x), (*colB)[x]});
    if (ha != hb) return std::nullopt;
  }
  std::optional<std::vector<int>> out;
  for_each_isomorphism(A, B, colA, colB, [&](const std::vector<int>& phi) {
    out = phi;
    return false;
  });
  return out;
}

bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B) { return find_isomorphism(A, B).has_value(); }

std::vector<std::vector<int>> automorphisms(const FiniteGroup& G, int cap) {
  if (G.order() > cap) throw CapExceeded("automorphisms: group order exceeds cap");
  std::set<std::vector<int>> perms;
  for_each_isomorphism(G, G, nullptr, nullptr, [&](const std::vector<int>& phi) {
    std::vector<int> perm(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c) perm[c] = G.class_of(phi[G.classes()[c].rep]);
    perms.insert(std::move(perm));
    return true;
  });
  return {perms.begin(), perms.end()};
}

namespace {

// Stabilizer chain for membership tests in a permutation group (composition (a*b)[x] = a[b[x]]).
class StabChain {
 public:
  using Perm = std::vector<int>;
  explicit StabChain(int degree) : deg_(degree) {}

  // Adds g to the group; returns false when g was already a member.
  bool add(const Perm& g) {
    auto [lvl, h] = sift(g, 0);
    if (lvl < 0) return false;
    extend(lvl, h);
    return true;
  }

 private:
  struct Level {
    int base;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // point b -> u with u[base] = b
  };

  Perm mul(const Perm& a, const Perm& b) const {
    Perm r(deg_);
    for (int x = 0; x < deg_; ++x) r[x] = a[b[x]];
    return r;
  }
  Perm inv(const Perm& a) const {
    Perm r(deg_);
    for (int x = 0; x < deg_; ++x) r[a[x]] = x;
    return r;
  }
  bool is_id(const Perm& a) const {
    for (int x = 0; x < deg_; ++x)
      if (a[x] != x) return false;
    return true;
  }

  // Residue of g after sifting from level i; level -1 means g is a member.
  std::pair<int, Perm> sift(Perm g, std::size_t i) const {
    for (; i < chain_.size(); ++i) {
      const auto& L = chain_[i];
      auto it = L.transversal.find(g[L.base]);
      if (it == L.transversal.end()) return {static_cast<int>(i), g};
      g = mul(inv(it->second), g);
    }
    if (is_id(g)) return {-1, g};
    return {static_cast<int>(i), g};
  }

  void extend(std::size_t i, const Perm& g) {
    if (i == chain_.size()) {
      int b = 0;
      while (g[b] == b) ++b;
      Perm id(deg_);
      for (int x = 0; x < deg_; ++x) id[x] = x;
      chain_.push_back({b, {}, {{b, id}}});
    }
    chain_[i].gens.push_back(g);
    // Extend the orbit, then test the Schreier generators involving a new point or the new generator.
    std::vector<int> old_points;
    for (const auto& [pt, u] : chain_[i].transversal) old_points.push_back(pt);
    std::vector<int> todo = old_points;
    std::vector<int> fresh;
    while (!todo.empty()) {
      int pt = todo.back();
      todo.pop_back();
      for (const auto& s : chain_[i].gens) {
        int q = s[pt];
        if (chain_[i].transversal.count(q)) continue;
        chain_[i].transversal.emplace(q, mul(s, chain_[i].transversal.at(pt)));
        fresh.push_back(q);
        todo.push_back(q);
      }
    }
    auto schreier = [&](int pt, const Perm& s) {
      const Perm& u = chain_[i].transversal.at(pt);
      const Perm& v = chain_[i].transversal.at(s[pt]);
      Perm h = mul(inv(v), mul(s, u));
      auto [lvl, r] = sift(h, i + 1);
      if (lvl >= 0) extend(static_cast<std::size_t>(lvl), r);
    };
    for (int pt : old_points) schreier(pt, chain_[i].gens.back());
    for (int pt : fresh)
      for (std::size_t k = 0; k < chain_[i].gens.size(); ++k) schreier(pt, Perm(chain_[i].gens[k]));
  }

  int deg_;
  std::deque<Level> chain_;
};

}  // namespace

std::vector<std::vector<int>> automorphism_generators(const FiniteGroup& G, int cap) {
  if (G.order() > cap) throw CapExceeded("automorphisms: group order exceeds cap");
  std::vector<std::vector<int>> gens;
  StabChain chain(G.num_classes());
  for_each_isomorphism(G, G, nullptr, nullptr, [&](const std::vector<int>& phi) {
    std::vector<int> perm(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c) perm[c] = G.class_of(phi[G.classes()[c].rep]);
    if (chain.add(perm)) gens.push_back(std::move(perm));
    return true;
  });
  return gens;
}

std::vector<std::vector<int>> outer_automorphisms(const FiniteGroup& G, const std::vector<long>* col) {
  auto seq = generating_sequence(G);
  std::set<std::vector<int>> keys;
  std::vector<std::vector<int>> out;
  for_each_isomorphism(G, G, col, col, [&](const std::vector<int>& phi) {
    std::vector<int> best;
    for (int h = 0; h < G.order(); ++h) {
      std::vector<int> t;
      for (int s : seq) t.push_back(G.conj(phi[s], h));
      if (best.empty() || t < best) best = std::move(t);
    }
    if (keys.insert(best).second) out.push_back(phi);
    return true;
  });
  return out;
}

}  // namespace finmat
