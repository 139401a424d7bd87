#pragma once

#include "finmat/groups/matfp.hpp"
#include "finmat/realize/realize.hpp"
#include "finmat/schurbound/schur.hpp"

#include <vector>

namespace finmat {

// True iff reduction modulo the chosen prime is injective on the group. Works on the
// stable lattice M = sum g.O_K^n, so generators need not be integral at p.
bool reduction_check(const RealizedSubgroup& R, const ReductionPrime& rp);

// Images of the generators acting on M / pM (split primes give n x n matrices over F_p).
std::vector<MatFp> reduce_generators(const std::vector<KMatrix>& gens, const FieldDescriptor& K,
                                     const ReductionPrime& rp, long cap = 200000);

// Conjugate into GL_n(O_K). Needs K = Q or a Euclidean imaginary quadratic field.
RealizedSubgroup integral_conjugate(const RealizedSubgroup& R);

// O_K basis (as columns) of the lattice spanned over O_K by the given column vectors.
KMatrix ok_span_basis(const std::vector<std::vector<QuadElem>>& cols, const FieldDescriptor& K);

}  // namespace finmat
