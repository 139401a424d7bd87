#pragma once

#include "finmat/groups/matfp.hpp"
#include "finmat/numbers/field.hpp"
#include "finmat/schurbound/schur.hpp"

#include <vector>

namespace finmat {

// Generators over F_p of the perfect subgroups of GL_n(K) of order dividing bound, one
// set per faithful realization class. Supported when the only nonabelian simple order
// dividing bound is 168 and bound | 336 (perfect candidates PSL(2,7) and SL(2,7)); empty
// when the bound forces solvability; UnsupportedBound otherwise.
std::vector<std::vector<MatFp>> perfect_seeds(int n, const FieldDescriptor& K, long bound, const ReductionPrime& rp);

}  // namespace finmat
