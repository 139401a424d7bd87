#include "doctest.h"

#include "finmat/chars/char_table.hpp"
#include "finmat/chars/characters.hpp"
#include "finmat/groups/search.hpp"
#include "finmat/groups/subgroups.hpp"

#include "oracles.hpp"

#include <sstream>

using namespace finmat;
using namespace finmat::oracle;

namespace {

MatFp M2(int p, int a, int b, int c, int d) { return MatFp::from_rows(p, {{a, b}, {c, d}}); }

Character vals(std::initializer_list<long> v) {
  Character c;
  for (long x : v) c.values.emplace_back(x);
  return c;
}

}  // namespace

TEST_CASE("small character tables") {
  auto S3 = FiniteGroup::from_matrices({M2(7, 0, 1, 1, 0), M2(7, 0, 6, 1, 6)});
  auto T = character_table(S3);
  REQUIRE(T.rows.size() == 3);
  CHECK(T.rows[0] == vals({1, 1, 1}));
  CHECK(T.rows[1] == vals({1, -1, 1}));
  CHECK(T.rows[2] == vals({2, 0, -1}));
  CHECK(inner(T, vals({6, 0, 0}), T.rows[2]) == CycNum(2));
  CHECK(inner(T, T.rows[0], T.rows[0]) == CycNum(1));

  auto C1 = FiniteGroup::from_matrices({MatFp::identity(5, 2)});
  auto T1 = character_table(C1);
  CHECK(T1.rows.size() == 1);
  CHECK(T1.rows[0] == vals({1}));
  CHECK(dixon_prime(48, 12) == 37);
  CHECK(dixon_prime(1, 1) == 3);
}

TEST_CASE("indicators and orbits") {
  auto Q8 = FiniteGroup::from_matrices({M2(5, 0, 4, 1, 0), M2(5, 2, 0, 0, 3)});
  auto T = character_table(Q8);
  CHECK(fs_indicator(T, 0) == 1);
  CHECK(T.degrees.back() == 2);
  CHECK(fs_indicator(T, 4) == -1);
  auto C3 = FiniteGroup::from_matrices({M2(7, 2, 0, 0, 2)});
  auto T3 = character_table(C3);
  CHECK(fs_indicator(T3, 1) == 0);
  auto oq = galois_orbits(T3, FieldDescriptor::rationals());
  REQUIRE(oq.size() == 2);
  CHECK(oq[1].members.size() == 2);
  CHECK(oq[1].sum == vals({2, -1, -1}));
  CHECK(galois_orbits(T3, FieldDescriptor::imag_quadratic(3)).size() == 3);
  // Q(sqrt(-3)) contains zeta_3 but Q(i) does not: C12 characters.
  auto C12 = FiniteGroup::from_matrices({MatFp::from_rows(13, {{2}})});
  auto T12 = character_table(C12);
  CHECK(galois_orbits(T12, FieldDescriptor::rationals()).size() == 6);
  CHECK(galois_orbits(T12, FieldDescriptor::imag_quadratic(1)).size() == 8);
  CHECK(galois_orbits(T12, FieldDescriptor::imag_quadratic(3)).size() == 9);
  for (const auto& o : galois_orbits(T12, FieldDescriptor::imag_quadratic(1)))
    for (const auto& v : o.sum.values) CHECK(subfield_membership(v, FieldDescriptor::imag_quadratic(1)));
}

TEST_CASE("candidate sums") {
  auto Q8 = FiniteGroup::from_matrices({M2(5, 0, 4, 1, 0), M2(5, 2, 0, 0, 3)});
  auto T = character_table(Q8);
  auto orbs = galois_orbits(T, FieldDescriptor::rationals());
  std::vector<int> m(orbs.size(), 1);
  m.back() = 2;
  CHECK(candidate_sums(T, orbs, 3, m).empty());
  m.back() = 1;
  CHECK(candidate_sums(T, orbs, 3, m).size() == 4);  // 2-dim plus any linear character

  auto C1 = FiniteGroup::from_matrices({MatFp::identity(5, 1)});
  auto T1 = character_table(C1);
  auto o1 = galois_orbits(T1, FieldDescriptor::imag_quadratic(7));
  auto c1 = candidate_sums(T1, o1, 3, {1});
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].total == vals({3}));
  CHECK(determinant_trivial(T1, o1, c1[0], {1}));
}

TEST_CASE("regular representation oracle on small groups") {
  int checked = 0;
  for (auto [q, bound] : std::vector<std::pair<int, int>>{{3, 24}, {5, 24}}) {
    for (const auto& G : enumerate_subgroups(2, q, bound)) {
      auto T = character_table(G);
      CHECK(verify_table(T));
      CHECK(regular_oracle(G, T));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("C2 x SL(2,3) table and faithful sums") {
  auto G = c2_sl23();
  REQUIRE(G.order() == 48);
  auto T = character_table(G);
  std::vector<std::vector<CycNum>> ours;
  for (const auto& r : T.rows) ours.push_back(r.values);
  auto ref = parse_rows(kRefTable);
  auto perm = match_tables(ref, ours);
  REQUIRE(perm.has_value());

  auto K = FieldDescriptor::imag_quadratic(19);
  auto orbs = galois_orbits(T, K);
  std::vector<int> m(orbs.size(), 1);
  auto cands = candidate_sums(T, orbs, 3, m);
  auto remap = [&](const std::vector<CycNum>& refrow) {
    Character c;
    c.values.resize(refrow.size());
    for (std::size_t j = 0; j < refrow.size(); ++j) c.values[(*perm)[j]] = refrow[j];
    return c;
  };
  auto s27 = remap(parse_rows({"3 1 -3 -1 0 0 1 -1 2 0 0 -2 -2 2"})[0]);
  auto s28 = remap(parse_rows({"3 -3 1 -1 0 0 1 -1 2 -2 -2 0 0 2"})[0]);
  int found = 0;
  for (const auto& c : cands) found += (c.total == s27) + (c.total == s28);
  CHECK(found == 2);
  auto ded = dedup_by_aut(cands, automorphisms(G));
  int kept = 0;
  for (const auto& c : ded) kept += (c.total == s27) + (c.total == s28);
  CHECK(kept == 1);
  CHECK(ded.size() < cands.size());

  // The orbit-level route agrees with the class-level route.
  auto bare = candidate_sums(T, orbs, 3, m, false);
  REQUIRE(bare.size() == cands.size());
  auto ded2 = dedup_by_aut(orbs, m, bare, automorphism_generators(G));
  REQUIRE(ded2.size() == ded.size());
  for (std::size_t i = 0; i < ded.size(); ++i) {
    CHECK(ded2[i].total == ded[i].total);
    CHECK(ded2[i].summands == ded[i].summands);
  }
}
