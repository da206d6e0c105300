#pragma once

// Minimal tope decompositions relative to a symmetric cycle.
//
// The 2n vertices of a symmetric cycle R contain a unique inclusion-
// minimal subset whose entrywise sum is a given tope T; its size is
// always odd.  Because any n consecutive cycle vertices form a basis of
// R^n, the subset falls out of one exact n-by-n solve: write T in the
// window basis R^0..R^{n-1}; the coefficients land in {-1,0,+1}, and
// coefficient -1 selects the antipode of the window vertex.

#include "omc/cycle.hpp"
#include "omc/instance.hpp"
#include "omc/sign_vector.hpp"

#include <vector>

namespace omc {

struct Decomposition {
  SignVector tope;
  // Coordinates of `tope` in the window basis, each -1, 0 or +1, in
  // window order.
  std::vector<int> lambda;
  // The decomposition set in window order (member k is the window
  // vertex or its antipode, for each nonzero lambda[k]); entrywise it
  // sums to `tope`.
  std::vector<SignVector> members;

  int q_size() const { return static_cast<int>(members.size()); }
};

// Decompose tope T over the vertices of R.  `window_start` selects
// which n consecutive vertices serve as the basis; the member *set* is
// independent of this choice (only `lambda` is window-relative).
// T must be a tope of `inst`, and R must be a cycle of `inst`.
Decomposition decompose(const OMInstance& inst, const SymmetricCycle& cycle,
                        const SignVector& tope, int window_start = 0);

// {"tope": .., "q_size": .., "lambda": [..], "members": [..]} — the
// members as sign strings, in window order.
std::string decomposition_json_string(const Decomposition& d);

// Independent oracle: enumerate all subsets of one vertex per antipodal
// pair and return the unique smallest one summing to T.  Exponential —
// guarded to n <= `cap`.  Also verifies along the way that *every*
// summing subset of V(R) contains the minimal one, and that exactly one
// subset of the minimal cardinality sums to T.
Decomposition brute_force_decompose(const OMInstance& inst,
                                    const SymmetricCycle& cycle,
                                    const SignVector& tope, int cap = 10);

}  // namespace omc
