#include "finmat/groups/finite_group.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace finmat {

FiniteGroup FiniteGroup::from_matrices(const std::vector<MatFp>& gens_in, std::size_t cap) {
  if (gens_in.empty()) throw Error("closure needs at least one generator");
  int p = gens_in[0].p, dim = gens_in[0].n;
  for (const auto& g : gens_in)
    if (g.p != p || g.n != dim || g.det() == 0) throw Error("closure: generators must be invertible of equal shape");
  FiniteGroup G;
  G.mats_.push_back(MatFp::identity(p, dim));
  G.index_.emplace(G.mats_[0], 0);
  G.parent_.push_back(-1);
  G.pgen_.push_back(-1);
  int k = static_cast<int>(gens_in.size());
  std::vector<int> rgen;
  for (std::size_t i = 0; i < G.mats_.size(); ++i) {
    for (int g = 0; g < k; ++g) {
      MatFp y = G.mats_[i] * gens_in[g];
      auto [it, fresh] = G.index_.emplace(y, static_cast<int>(G.mats_.size()));
      if (fresh) {
        if (G.mats_.size() >= cap) throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        G.mats_.push_back(y);
        G.parent_.push_back(static_cast<int>(i));
        G.pgen_.push_back(g);
      }
      rgen.push_back(it->second);
    }
  }
  int n = static_cast<int>(G.mats_.size());
  G.n_ = n;
  G.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    G.table_[static_cast<std::size_t>(i) * n] = i;
    for (int j = 1; j < n; ++j) {
      int a = G.table_[static_cast<std::size_t>(i) * n + G.parent_[j]];
      G.table_[static_cast<std::size_t>(i) * n + j] = rgen[static_cast<std::size_t>(a) * k + G.pgen_[j]];
    }
  }
  std::vector<int> gi;
  for (int g = 0; g < k; ++g) gi.push_back(rgen[g]);
  G.finish(gi);
  return G;
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table, std::vector<int> gens) {
  if (static_cast<std::size_t>(n) * n != table.size()) throw Error("from_table: size mismatch");
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  for (int i = 0; i < n; ++i)
    if (G.mul(0, i) != i || G.mul(i, 0) != i) throw Error("from_table: element 0 is not the identity");
  G.finish(std::move(gens));
  return G;
}

void FiniteGroup::finish(std::vector<int> gens) {
  gens_ = std::move(gens);
  int n = n_;
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mul(i, j) == 0) {
        inv_[i] = j;
        break;
      }
  ord_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, k = 1;
    while (x != 0) {
      x = mul(x, i);
      ++k;
    }
    ord_[i] = k;
  }
  if (parent_.empty()) {
    parent_.assign(n, -2);
    pgen_.assign(n, -1);
    parent_[0] = -1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
        int y = mul(queue[q], gens_[g]);
        if (parent_[y] == -2) {
          parent_[y] = queue[q];
          pgen_[y] = g;
          queue.push_back(y);
        }
      }
    if (static_cast<int>(queue.size()) != n) throw Error("from_table: generators do not generate");
  }
  build_classes();
}

void FiniteGroup::build_classes() {
  int n = n_;
  std::vector<int> seen(n, -1);
  std::vector<ConjClass> cls;
  for (int i = 0; i < n; ++i) {
    if (seen[i] >= 0) continue;
    ConjClass c;
    c.members.push_back(i);
    seen[i] = 1;
    for (std::size_t q = 0; q < c.members.size(); ++q)
      for (int g : gens_) {
        int y = conj(c.members[q], g);
        if (seen[y] < 0) {
          seen[y] = 1;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members[0];
    c.order = ord_[c.rep];
    cls.push_back(std::move(c));
  }
  std::sort(cls.begin(), cls.end(), [](const ConjClass& a, const ConjClass& b) {
    return std::make_tuple(a.order, a.members.size(), a.rep) < std::make_tuple(b.order, b.members.size(), b.rep);
  });
  classes_ = std::move(cls);
  class_of_.assign(n, 0);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int x : classes_[c].members) class_of_[x] = c;
}

int FiniteGroup::pow(int a, long k) const {
  long m = ord_[a];
  k %= m;
  if (k < 0) k += m;
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : ord_) e = std::lcm(e, o);
  return e;
}

int FiniteGroup::index_of(const MatFp& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FiniteGroup::word(int x) const {
  std::vector<int> w;
  while (x != 0) {
    w.push_back(pgen_[x]);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> FiniteGroup::subgroup_elements(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> el{0};
  in[0] = 1;
  for (std::size_t q = 0; q < el.size(); ++q)
    for (int g : gens) {
      int y = mul(el[q], g);
      if (!in[y]) {
        in[y] = 1;
        el.push_back(y);
      }
    }
  std::sort(el.begin(), el.end());
  return el;
}

FiniteGroup FiniteGroup::restrict_to(const std::vector<int>& elems, const std::vector<int>& gens) const {
  std::vector<int> loc(n_, -1);
  std::vector<int> order_list{0};
  for (int x : elems)
    if (x != 0) order_list.push_back(x);
  int m = static_cast<int>(order_list.size());
  for (int i = 0; i < m; ++i) loc[order_list[i]] = i;
  std::vector<int> tab(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = loc[mul(order_list[i], order_list[j])];
      if (v < 0) throw Error("restrict_to: element set is not closed");
      tab[static_cast<std::size_t>(i) * m + j] = v;
    }
  std::vector<int> lg;
  for (int g : gens) lg.push_back(loc[g]);
  FiniteGroup H = from_table(m, std::move(tab), lg);
  if (has_matrices()) {
    for (int x : order_list) {
      H.mats_.push_back(mats_[x]);
      H.index_.emplace(mats_[x], static_cast<int>(H.mats_.size()) - 1);
    }
  }
  return H;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mul(gens_[i], gens_[j]) != mul(gens_[j], gens_[i])) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (const auto& c : classes_)
    if (c.members.size() == 1) z.push_back(c.rep);
  std::sort(z.begin(), z.end());
  return z;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> comms;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_elements(comms);
}

IsoInvariants iso_invariants(const FiniteGroup& G) {
  IsoInvariants I;
  I.order = G.order();
  I.exponent = G.exponent();
  for (const auto& c : G.classes()) I.class_sizes.push_back(static_cast<int>(c.members.size()));
  std::sort(I.class_sizes.begin(), I.class_sizes.end());
  for (int x = 0; x < G.order(); ++x) ++I.order_histogram[G.elem_order(x)];
  I.center_order = static_cast<int>(G.center().size());
  auto D = G.derived_subgroup();
  std::vector<char> inD(G.order(), 0);
  for (int x : D) inD[x] = 1;
  for (int x = 0; x < G.order(); ++x) {
    int k = 1, y = x;
    while (!inD[y]) {
      y = G.mul(y, x);
      ++k;
    }
    I.abelianization.push_back(k);
  }
  std::sort(I.abelianization.begin(), I.abelianization.end());
  I.derived_series.push_back(G.order());
  FiniteGroup cur = G;
  while (true) {
    auto d = cur.derived_subgroup();
    if (static_cast<int>(d.size()) == cur.order()) break;
    I.derived_series.push_back(static_cast<int>(d.size()));
    if (d.size() == 1) break;
    // Generators of the derived subgroup: all of its elements (small groups only).
    cur = cur.restrict_to(d, d);
  }
  return I;
}

}  // namespace finmat
