#pragma once

#include "finmat/groups/finite_group.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace finmat {

// Short generating sequence chosen greedily (largest subgroup gain, rarest element type).
std::vector<int> generating_sequence(const FiniteGroup& G);

// Enumerates isomorphisms A -> B that preserve the optional element colors.
// The callback receives the full element map; returning false stops the search.
// Images of the first generator are restricted to class representatives of B, so each
// isomorphism is produced up to composition with inner automorphisms of B.
void for_each_isomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<long>* colA,
                          const std::vector<long>* colB,
                          const std::function<bool(const std::vector<int>&)>& cb);

// Full element map of an isomorphism, if any.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B,
                                                 const std::vector<long>* colA = nullptr,
                                                 const std::vector<long>* colB = nullptr);
bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

// The group of permutations of conjugacy classes induced by Aut(G), as a sorted list.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& G, int cap = 1536);
// A generating set of that permutation group (greedy over the sorted list).
std::vector<std::vector<int>> automorphism_generators(const FiniteGroup& G, int cap = 1536);

// Every automorphism of G preserving colors, up to inner automorphisms (element maps).
std::vector<std::vector<int>> outer_automorphisms(const FiniteGroup& G, const std::vector<long>* col);

}  // namespace finmat
