#include "finmat/pipeline/seeds.hpp"

#include "finmat/chars/char_table.hpp"
#include "finmat/chars/characters.hpp"
#include "finmat/errors.hpp"
#include "finmat/groups/search.hpp"
#include "finmat/groups/subgroups.hpp"
#include "finmat/realize/lattice.hpp"
#include "finmat/realize/realize.hpp"

#include <string>

namespace finmat {

namespace {

// PSL(2,7) as GL(3,2), and SL(2,7).
std::vector<FiniteGroup> perfect_library(long bound) {
  std::vector<FiniteGroup> out;
  if (bound % 168 == 0)
    out.push_back(FiniteGroup::from_matrices({MatFp::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                              MatFp::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})}));
  if (bound % 336 == 0)
    out.push_back(FiniteGroup::from_matrices({MatFp::from_rows(7, {{1, 1}, {0, 1}}), MatFp::from_rows(7, {{1, 0}, {1, 1}})}));
  return out;
}

}  // namespace

std::vector<std::vector<MatFp>> perfect_seeds(int n, const FieldDescriptor& K, long bound, const ReductionPrime& rp) {
  if (!bound_needs_seeds(bound)) return {};
  if (bound > 10000) throw UnsupportedBound("bound " + std::to_string(bound) + " is beyond the simple-order table");
  for (long s : nonabelian_simple_orders())
    if (bound % s == 0 && s != 168)
      throw UnsupportedBound("no perfect seeds for simple order " + std::to_string(s));
  // The perfect groups of order dividing 336 are PSL(2,7) and SL(2,7); larger multiples of
  // 168 admit further perfect extensions that are not in the library.
  if (bound != 168 && bound != 336)
    throw UnsupportedBound("perfect extensions of PSL(2,7) of order dividing " + std::to_string(bound));
  std::vector<std::vector<MatFp>> seeds;
  for (const auto& G : perfect_library(bound)) {
    auto T = character_table(G);
    auto orbits = galois_orbits(T, K);
    std::vector<OrbitRealization> mods(orbits.size());
    std::vector<int> m(orbits.size(), n + 1);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      int d0 = T.degrees[orbits[o].members[0]] * static_cast<int>(orbits[o].members.size());
      if (d0 > n) continue;
      mods[o] = realize_orbit(G, T, orbits, static_cast<int>(o), K, n);
      m[o] = mods[o].schur;
    }
    auto cands = dedup_by_aut(candidate_sums(T, orbits, n, m), automorphisms(G));
    for (const auto& c : cands) {
      auto R = assemble(G, T, orbits, c, mods, K);
      auto red = reduce_generators(R.generators, K, rp);
      if (FiniteGroup::from_matrices(red).order() != G.order())
        throw InvariantViolation("seed reduction is not injective");
      seeds.push_back(std::move(red));
    }
  }
  return seeds;
}

}  // namespace finmat
