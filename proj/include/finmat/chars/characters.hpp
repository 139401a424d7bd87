#pragma once

#include "finmat/chars/char_table.hpp"
#include "finmat/numbers/field.hpp"

#include <utility>
#include <vector>

namespace finmat {

struct GaloisOrbit {
  std::vector<int> members;  // irreducible indices, increasing
  Character sum;
};

// Orbits of the irreducibles under the automorphisms of Q(zeta_e) fixing K.
std::vector<GaloisOrbit> galois_orbits(const CharacterTable& T, const FieldDescriptor& K);

// Frobenius-Schur indicator of row i.
int fs_indicator(const CharacterTable& T, int i);

struct CandidateCharacter {
  std::vector<std::pair<int, int>> summands;  // (orbit index, number of blocks)
  Character total;
  bool faithful = false;
  bool field_of_values_in_K = true;
};

// Kernel of a character as a list of classes (those with value equal to the degree).
std::vector<int> kernel_classes(const Character& chi);
bool is_faithful(const Character& chi);

// Sums of blocks (orbit sum times Schur index) of total degree n with trivial kernel.
// Without totals only the summand lists are filled.
std::vector<CandidateCharacter> candidate_sums(const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                                               int n, const std::vector<int>& schur_indices,
                                               bool with_totals = true);

Character candidate_total(const std::vector<GaloisOrbit>& orbits, const CandidateCharacter& cand,
                          const std::vector<int>& schur_indices);

// Applies a class permutation: result[c] = chi[perm[c]].
Character permute(const Character& chi, const std::vector<int>& perm);

// One candidate per orbit under the class permutations; each representative carries
// the lexicographically least value vector of its orbit. Output sorted by that vector.
std::vector<CandidateCharacter> dedup_by_aut(const std::vector<CandidateCharacter>& cands,
                                             const std::vector<std::vector<int>>& autperms);

// Same classes computed on summand lists through the induced action on Galois orbits.
// Totals need not be filled on input; representatives carry them on output.
std::vector<CandidateCharacter> dedup_by_aut(const std::vector<GaloisOrbit>& orbits,
                                             const std::vector<int>& schur_indices,
                                             std::vector<CandidateCharacter> cands,
                                             const std::vector<std::vector<int>>& autperms);

// True when the determinant of the representation affording the sum is trivial.
bool determinant_trivial(const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                         const CandidateCharacter& cand, const std::vector<int>& schur_indices);

}  // namespace finmat
