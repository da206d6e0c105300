#pragma once

// Exact feasibility test for strict homogeneous linear systems
// a_i . x > 0, used to decide which sign patterns of a vector
// configuration are realized by an open cell of the arrangement.

#include "omc/exact.hpp"

#include <vector>

namespace omc {

// True iff some x satisfies row . x > 0 for every row.  Decided by
// Fourier-Motzkin elimination; strictness survives elimination because
// only positive combinations of strict inequalities are ever formed.
// Rows are gcd-normalized and deduplicated at each stage to keep the
// row count in check.  Exact: no tolerance is involved anywhere.
bool strict_cone_nonempty(std::vector<IntVector> rows);

}  // namespace omc
