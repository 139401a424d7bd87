#pragma once

#include "finmat/groups/finite_group.hpp"

#include <string>
#include <vector>

namespace finmat {

// Invariant factors d_1 | d_2 | ... of an abelian group; empty for the trivial group.
std::vector<long> abelian_invariants(const FiniteGroup& A);
// "C1", "C6", "C2^2", "C2xC4", ...
std::string abelian_label(const std::vector<long>& invariants);

// Human-readable structure name. Abelian groups by invariants, then a small named library
// (dihedral, dicyclic, A4, S4, SL(2,3), GL(2,3), GL(3,2)), then a central abelian direct
// factor split, else "G<order>-<hex>" from the isomorphism invariants.
std::string iso_label(const FiniteGroup& G);

}  // namespace finmat
