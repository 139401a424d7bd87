#pragma once

#include "finmat/numbers/cyclotomic.hpp"
#include "finmat/numbers/field.hpp"
#include "finmat/numbers/kmatrix.hpp"

#include <vector>

namespace finmat {

// L is the subfield of Q(zeta_conductor) fixed by the residues in `fixing`; K is a
// subfield of L. The basis spans L over K.
struct ExtensionBasis {
  long conductor = 1;
  std::vector<long> fixing{1};
  FieldDescriptor K;
  std::vector<CycNum> basis;
  int m = 1;
  KMatrix gram_inverse;  // inverse of (Tr_{L/K}(b_i b_j))
};

// L = Q(zeta_N) over K, basis of powers of zeta_N chosen greedily.
ExtensionBasis cyclotomic_basis(long N, const FieldDescriptor& K);
// L quadratic over Q: basis {1, ring generator}.
ExtensionBasis quadratic_basis(const FieldDescriptor& L);
// Explicit basis; throws Error unless it is a K-basis of L.
ExtensionBasis make_basis(long N, std::vector<long> fixing, const FieldDescriptor& K, std::vector<CycNum> basis);

// Tr_{L/K}.
CycNum trace_LK(const CycNum& a, const ExtensionBasis& B);
// K-coordinates of a in the basis.
std::vector<QuadElem> coordinates(const CycNum& a, const ExtensionBasis& B);

KMatrix res_scalar(const CycNum& a, const ExtensionBasis& B);
using CycMatrix = std::vector<std::vector<CycNum>>;
// Rows and columns indexed (i, r) -> i*m + r, i.e. b_1 v_1, ..., b_m v_1, b_1 v_2, ...
KMatrix res_matrix(const CycMatrix& A, const ExtensionBasis& B);
bool res_trace_check(const CycMatrix& A, const ExtensionBasis& B);
std::vector<CycNum> res_character(const std::vector<CycNum>& chi, const ExtensionBasis& B);

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b);

}  // namespace finmat
