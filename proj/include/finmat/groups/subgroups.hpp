#pragma once

#include "finmat/groups/finite_group.hpp"

#include <vector>

namespace finmat {

struct SubgroupOptions {
  enum class Route { Auto, Ambient, Coprime };
  Route route = Route::Auto;
  int jobs = 1;
  // Generator sets of non-solvable subgroups that cyclic extension cannot reach.
  std::vector<std::vector<MatFp>> seeds;
};

// Orders of nonabelian simple groups up to 10000.
const std::vector<long>& nonabelian_simple_orders();
// True when some group of order dividing bound may be non-solvable.
bool bound_needs_seeds(long bound);

// Subgroups of GL_n(F_q) of order dividing bound, one per conjugacy class.
std::vector<FiniteGroup> enumerate_subgroups(int n, long q, long bound, const SubgroupOptions& opt = {});

// All invertible n x n matrices over F_q, in lexicographic entry order.
std::vector<MatFp> general_linear_group(int n, long q);

// Conjugacy in GL_n(F_q) for groups of order prime to q: an isomorphism preserving
// characteristic polynomials exists.
bool conjugate_coprime(const FiniteGroup& A, const FiniteGroup& B);
// Conjugacy by scanning an explicit ambient group.
bool conjugate_in(const std::vector<MatFp>& ambient, const FiniteGroup& A, const FiniteGroup& B);

// Characteristic polynomial packed into one integer (base q digits).
long charpoly_code(const MatFp& m);

}  // namespace finmat
