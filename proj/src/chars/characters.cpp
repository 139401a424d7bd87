#include "finmat/chars/characters.hpp"

#include "finmat/errors.hpp"

#include "finmat/numbers/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace finmat {

std::vector<GaloisOrbit> galois_orbits(const CharacterTable& T, const FieldDescriptor& K) {
  const int c = T.num_classes();
  const int n = static_cast<int>(T.rows.size());
  std::map<std::vector<CycNum>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(T.rows[i].values, i);
  std::vector<int> orbit_of(n, -1);
  std::vector<GaloisOrbit> out;
  const auto ks = galois_fixing(T.exponent, K);
  for (int i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    GaloisOrbit O;
    for (long k : ks) {
      std::vector<CycNum> v(c);
      for (int l = 0; l < c; ++l) v[l] = T.rows[i].values[T.power[l][k % T.exponent]];
      int j = index.at(v);
      if (orbit_of[j] < 0) {
        orbit_of[j] = static_cast<int>(out.size());
        O.members.push_back(j);
      }
    }
    std::sort(O.members.begin(), O.members.end());
    O.sum.values.assign(c, CycNum(0));
    for (int j : O.members)
      for (int l = 0; l < c; ++l) O.sum.values[l] += T.rows[j].values[l];
    out.push_back(std::move(O));
  }
  return out;
}

int fs_indicator(const CharacterTable& T, int i) {
  CycNum s;
  for (int l = 0; l < T.num_classes(); ++l)
    s += T.rows[i].values[T.power[l][2 % T.exponent]].scaled(T.classes[l].size);
  Rational r = s.rational_value() / T.group_order;
  return static_cast<int>(r.get_num().get_si());
}

std::vector<int> kernel_classes(const Character& chi) {
  std::vector<int> k;
  for (int l = 0; l < static_cast<int>(chi.values.size()); ++l)
    if (chi.values[l] == chi.values[0]) k.push_back(l);
  return k;
}

bool is_faithful(const Character& chi) { return kernel_classes(chi).size() == 1; }

std::vector<CandidateCharacter> candidate_sums(const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                                               int n, const std::vector<int>& schur_indices, bool with_totals) {
  const int c = T.num_classes();
  std::vector<int> block_deg(orbits.size());
  // ker(sum of characters) is the intersection of their kernels, so faithfulness is decided on bitsets.
  std::vector<std::vector<char>> ker(orbits.size(), std::vector<char>(c));
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    int d = 0;
    for (int i : orbits[o].members) d += T.degrees[i];
    block_deg[o] = d * schur_indices[o];
    for (int l = 0; l < c; ++l) ker[o][l] = orbits[o].sum.values[l] == orbits[o].sum.values[0];
  }
  std::vector<CandidateCharacter> out;
  std::vector<int> count(orbits.size(), 0);
  std::function<void(std::size_t, int, const std::vector<char>&)> rec = [&](std::size_t o, int left,
                                                                           const std::vector<char>& k) {
    if (left == 0) {
      if (std::count(k.begin(), k.end(), 1) != 1) return;
      CandidateCharacter cc;
      cc.faithful = true;
      for (std::size_t b = 0; b < orbits.size(); ++b)
        if (count[b] > 0) cc.summands.emplace_back(static_cast<int>(b), count[b]);
      if (with_totals) cc.total = candidate_total(orbits, cc, schur_indices);
      out.push_back(std::move(cc));
      return;
    }
    if (o == orbits.size()) return;
    std::vector<char> kk(c);
    for (int l = 0; l < c; ++l) kk[l] = k[l] && ker[o][l];
    for (int m = left / block_deg[o]; m >= 0; --m) {
      count[o] = m;
      rec(o + 1, left - m * block_deg[o], m > 0 ? kk : k);
    }
    count[o] = 0;
  };
  rec(0, n, std::vector<char>(c, 1));
  return out;
}

Character candidate_total(const std::vector<GaloisOrbit>& orbits, const CandidateCharacter& cand,
                          const std::vector<int>& schur_indices) {
  Character t;
  t.values.assign(orbits.empty() ? 0 : orbits[0].sum.values.size(), CycNum(0));
  for (const auto& [b, cnt] : cand.summands) {
    Rational f = static_cast<long>(cnt) * schur_indices[b];
    for (std::size_t l = 0; l < t.values.size(); ++l) t.values[l] += orbits[b].sum.values[l].scaled(f);
  }
  return t;
}

std::vector<CandidateCharacter> dedup_by_aut(const std::vector<GaloisOrbit>& orbits,
                                             const std::vector<int>& schur_indices,
                                             std::vector<CandidateCharacter> cands,
                                             const std::vector<std::vector<int>>& autperms) {
  // Automorphisms permute the Galois orbits; orbits of candidates are computed on summand lists.
  std::map<std::vector<CycNum>, int> by_sum;
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) by_sum.emplace(orbits[o].sum.values, o);
  std::vector<std::vector<int>> operm;
  for (const auto& p : autperms) {
    std::vector<int> q(orbits.size());
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      auto it = by_sum.find(permute(orbits[o].sum, p).values);
      if (it == by_sum.end()) throw InvariantViolation("automorphism does not permute the Galois orbits");
      q[o] = it->second;
    }
    operm.push_back(std::move(q));
  }
  using Key = std::vector<std::pair<int, int>>;
  std::map<Key, int> index;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) index.emplace(cands[i].summands, i);
  const std::size_t c = orbits.empty() ? 0 : orbits[0].sum.values.size();
  // Lexicographic comparison of a candidate's total against a stored vector, evaluated class by class.
  auto less_than = [&](const CandidateCharacter& a, const std::vector<CycNum>& best) {
    for (std::size_t l = 0; l < c; ++l) {
      CycNum v(0);
      for (const auto& [b, cnt] : a.summands)
        v += orbits[b].sum.values[l].scaled(Rational(static_cast<long>(cnt) * schur_indices[b]));
      if (v < best[l]) return true;
      if (best[l] < v) return false;
    }
    return false;
  };
  std::vector<char> seen(cands.size(), 0);
  std::vector<CandidateCharacter> out;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    if (seen[i]) continue;
    int best = i;
    auto best_total = candidate_total(orbits, cands[i], schur_indices).values;
    std::vector<int> todo{i};
    seen[i] = 1;
    while (!todo.empty()) {
      int cur = todo.back();
      todo.pop_back();
      if (cur != best && less_than(cands[cur], best_total)) {
        best = cur;
        best_total = candidate_total(orbits, cands[cur], schur_indices).values;
      }
      for (const auto& q : operm) {
        Key img;
        for (auto [b, cnt] : cands[cur].summands) img.emplace_back(q[b], cnt);
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end()) throw InvariantViolation("candidate set is not stable under automorphisms");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          todo.push_back(it->second);
        }
      }
    }
    CandidateCharacter r = std::move(cands[best]);
    r.total.values = std::move(best_total);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.total < b.total; });
  return out;
}

Character permute(const Character& chi, const std::vector<int>& perm) {
  Character r;
  r.values.resize(chi.values.size());
  for (std::size_t l = 0; l < perm.size(); ++l) r.values[l] = chi.values[perm[l]];
  return r;
}

std::vector<CandidateCharacter> dedup_by_aut(const std::vector<CandidateCharacter>& cands,
                                             const std::vector<std::vector<int>>& autperms) {
  // Orbits under the group generated by autperms; the candidate set is Aut-stable.
  std::map<std::vector<CycNum>, int> index;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) index.emplace(cands[i].total.values, i);
  std::vector<int> orbit(cands.size(), -1);
  std::vector<int> reps;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    if (orbit[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    int best = i;
    std::vector<int> todo{i};
    orbit[i] = id;
    while (!todo.empty()) {
      int c = todo.back();
      todo.pop_back();
      if (cands[c].total < cands[best].total) best = c;
      for (const auto& p : autperms) {
        auto img = permute(cands[c].total, p);
        auto it = index.find(img.values);
        if (it == index.end()) throw InvariantViolation("candidate set is not stable under automorphisms");
        if (orbit[it->second] < 0) {
          orbit[it->second] = id;
          todo.push_back(it->second);
        }
      }
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [&](int a, int b) { return cands[a].total < cands[b].total; });
  std::vector<CandidateCharacter> out;
  for (int r : reps) out.push_back(cands[r]);
  return out;
}

bool determinant_trivial(const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                         const CandidateCharacter& cand, const std::vector<int>& schur_indices) {
  for (int l = 0; l < T.num_classes(); ++l) {
    const long o = T.classes[l].order;
    long ex = 0;
    for (const auto& [b, cnt] : cand.summands)
      for (int i : orbits[b].members) {
        const auto& m = T.eigen[i][l];
        long s = 0;
        for (long k = 0; k < o; ++k) s += k * m[k];
        ex += s * cnt * schur_indices[b];
      }
    if (ex % o != 0) return false;
  }
  return true;
}

}  // namespace finmat
