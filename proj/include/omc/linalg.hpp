#pragma once

// Small exact linear solvers shared by the decomposition and span
// machinery.  Dense, desk-scale, no overflow concerns: all arithmetic
// is arbitrary precision.

#include "omc/exact.hpp"

#include <optional>
#include <vector>

namespace omc {

// Solve the square system A x = b exactly.  Forward elimination is
// fraction-free (Bareiss), so intermediate entries stay integral and
// modest; back substitution runs over rationals.  Returns nullopt when
// A is singular.
std::optional<std::vector<Rational>> bareiss_solve(
    std::vector<IntVector> matrix, IntVector rhs);

struct ConsistentSolve {
  bool consistent = false;
  // One solution of columns * c = rhs when consistent (free variables,
  // if any, are set to zero).
  std::vector<Rational> coefficients;
};

// Solve sum_i c_i * columns[i] = rhs over the rationals, where each
// column has the same length as rhs.  Gaussian elimination with exact
// rational arithmetic; reports inconsistency instead of failing.
ConsistentSolve solve_in_span(const std::vector<IntVector>& columns,
                              const IntVector& rhs);

}  // namespace omc
