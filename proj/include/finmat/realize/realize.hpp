#pragma once

#include "finmat/chars/characters.hpp"
#include "finmat/groups/finite_group.hpp"
#include "finmat/numbers/kmatrix.hpp"
#include "finmat/schurbound/schur.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finmat {

// Vector of the left regular module K[G], indexed by group elements.
using RegVec = std::vector<QuadElem>;

// Element of the group algebra K[G] as a coefficient vector.
using GroupAlgebraElem = std::vector<QuadElem>;

// a * b in K[G].
GroupAlgebraElem ga_mul(const FiniteGroup& G, const GroupAlgebraElem& a, const GroupAlgebraElem& b);

// Central idempotent (chi(1)/|G|) sum conj(orbit_sum(g)) g, coefficients in K.
GroupAlgebraElem isotypic_idempotent(const FiniteGroup& G, const CharacterTable& T, const GaloisOrbit& O,
                                     const FieldDescriptor& K);
// The idempotent as a |G| x |G| matrix acting on the regular module: P[y][x] = e(y x^-1).
KMatrix isotypic_projector(const FiniteGroup& G, const GroupAlgebraElem& e);
// e^2 = e and e central (equivalently P^2 = P and P commutes with the regular action).
bool projector_checks(const FiniteGroup& G, const GroupAlgebraElem& e);

struct GModuleK {
  int dim = 0;
  std::vector<KMatrix> images;  // rho(x) for every element x
  Character afforded;
  std::vector<RegVec> basis;  // row echelon basis inside the regular module
};

// Smallest G-stable subspace containing the seeds. Throws DegenerateComponent if all
// seeds vanish.
GModuleK spin_up(const FiniteGroup& G, const std::vector<RegVec>& seeds, const FieldDescriptor& K);

struct OrbitRealization {
  int schur = 1;
  // Present when the realization was constructed; a Schur index established without a
  // module (quaternion algebra ramified over K) leaves it empty unless the division
  // algebra module itself was requested.
  std::optional<GModuleK> module;
  std::string method;
};

// Irreducible K[G]-module for the orbit and its Schur index. max_dim bounds the module
// dimension of interest; larger Schur-index modules are not built.
OrbitRealization realize_orbit(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                               int orbit, const FieldDescriptor& K, int max_dim);

int schur_index(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits, int orbit,
                const FieldDescriptor& K);

// Hilbert symbol (a,b)_p over Q; p = 0 is the real place.
int hilbert_symbol(const Rational& a, const Rational& b, long p);
// Whether the quaternion algebra (a,b) over Q splits after extension to K.
bool quaternion_splits(const Rational& a, const Rational& b, const FieldDescriptor& K);

struct RealizedSubgroup {
  FieldDescriptor field;
  int n = 0;
  std::vector<KMatrix> generators;
  long order = 0;
  Character character;
  bool is_sl = false;
  std::string iso_label;
  std::string abstract_ref;
  // Class sizes and element orders, aligned with character entries.
  std::vector<long> class_sizes;
  std::vector<int> class_orders;
};

// Block-diagonal realization of a candidate from orbit modules. Throws CharacterMismatch
// when the afforded character differs, UnfaithfulImage when it is not injective.
RealizedSubgroup assemble(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                          const CandidateCharacter& cand, const std::vector<OrbitRealization>& modules,
                          const FieldDescriptor& K);

// Character of a matrix realization of G (images indexed by element).
Character character_of(const CharacterTable& T, const std::vector<KMatrix>& images, const FieldDescriptor& K);

}  // namespace finmat
