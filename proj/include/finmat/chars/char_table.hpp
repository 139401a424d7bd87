#pragma once

#include "finmat/groups/finite_group.hpp"
#include "finmat/numbers/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace finmat {

struct Character {
  std::vector<CycNum> values;  // indexed by class
  const CycNum& degree() const { return values.at(0); }
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
  friend bool operator<(const Character& a, const Character& b) { return a.values < b.values; }
};

struct ClassData {
  int rep = 0;
  int size = 1;
  int order = 1;
};

struct CharacterTable {
  int group_order = 1;
  int exponent = 1;
  std::vector<ClassData> classes;
  // power[c][k] is the class of g^k for g in class c, k = 0..exponent-1.
  std::vector<std::vector<int>> power;
  std::vector<Character> rows;
  std::vector<int> degrees;
  // eigen[i][c][k]: multiplicity of exp(2 pi i k / o_c) as an eigenvalue of rho_i(g_c).
  std::vector<std::vector<std::vector<int>>> eigen;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int inverse_class(int c) const { return power[c][exponent - 1]; }
};

// Dixon-Schneider over F_ell, lifted to exact cyclotomic values. Throws CapExceeded for
// |G| > cap.
CharacterTable character_table(const FiniteGroup& G, int cap = 4096);

// Dixon prime: smallest ell = 1 mod e with ell > 2 sqrt(order).
long dixon_prime(long order, long e);

// (1/|G|) sum over classes size * f * conj(h).
CycNum inner(const CharacterTable& T, const Character& f, const Character& h);

// Exact row orthonormality, column orthogonality and sum of squared degrees.
bool verify_table(const CharacterTable& T);

}  // namespace finmat

namespace finmat {

// Column permutation perm with B[sigma(i)][perm[j]] = A[i][j] for some row bijection
// sigma, if one exists.
std::optional<std::vector<int>> match_tables(const std::vector<std::vector<CycNum>>& A,
                                             const std::vector<std::vector<CycNum>>& B);

}  // namespace finmat
