#pragma once

// The linear-algebra layer: the four structural matrices of order t+1,
// the omega and long h-vectors derived from a complex's long f-vector,
// and the relation checks (symmetry laws, inner products against the
// all-ones vector, span membership, the bilinear orthogonality form).
//
// Conventions, used consistently below (all indices start at 0, all
// matrices are square of order t+1, vectors multiply from the left as
// rows):
//
//   U = back identity            U[i][t-i] = 1
//   T = forward shift            T[i][i+1] = 1   (x*T shifts x right)
//   S = signed binomial          S[i][j] = (-1)^(j-i) C(t-i, j-i)
//   M = U S S^T U                M[i][j] = (-1)^(i+j) C(i+j, i)
//
// For a complex L with m vertices whose long f-vector at padding t is
// f, the omega vector is (beta(m;t) - f) T^(t-m) U and the long
// h-vector is omega * S.  Everything is exact.

#include "omc/complex.hpp"
#include "omc/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace omc {

class IntMatrix {
public:
  explicit IntMatrix(int order);
  static IntMatrix identity(int order);

  int order() const { return order_; }
  Int& at(int i, int j);
  const Int& at(int i, int j) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  IntMatrix pow(int exponent) const;

  bool operator==(const IntMatrix&) const = default;

private:
  int order_;
  IntVector cells_;
};

IntVector row_times_matrix(const IntVector& row, const IntMatrix& m);

enum class Transform { BackIdentity, ForwardShift, SignedBinomial, MKernel };

// Memoized structural matrices of order t+1.  The MKernel build cross-
// checks the closed-form entries against the product U S S^T U once per
// order and refuses to hand out a matrix that fails.
const IntMatrix& build_transform(Transform kind, int t);

// (beta(m;t) - f) T^(t-m) U, the padded mirror of the missing-face
// counts.  `f` must already be padded to t (t+1 entries); 1 <= m <= t.
IntVector omega_vector(const IntVector& f, int m, int t);

// omega * S: the long h-vector.  Same preconditions.
IntVector long_h_vector(const IntVector& f, int m, int t);

enum class SymmetryLaw { Symmetric, Antisymmetric };

// h_k == h_{t-k} for every k (Symmetric), or h_k == -h_{t-k}
// (Antisymmetric).
bool check_symmetry_law(const IntVector& h, SymmetryLaw law);

// <h, (1,...,1)>.
Int iota_product(const IntVector& h);

// Long h-vector of the k-simplex boundary at padding t.
IntVector simplex_boundary_h(int k, int t);

struct SpanMembership {
  bool member = false;
  std::vector<int> basis_ks;           // which boundary h-vectors span
  std::vector<Rational> coefficients;  // one per basis_ks entry when member
};

// Is h a rational combination of the simplex-boundary h-vectors
// h(k; t) for k of the parity opposite to t, 1 <= k <= s-2?
// (t even: k odd; t odd: k even.)  Requires s < t.
SpanMembership span_membership(const IntVector& h, int s, int t);

enum class MatrixSide { Left, Right };

// If v is an eigenvector of the back identity, returns the eigenvalue
// (+1 or -1); nullopt otherwise.  The matrix is symmetric, so the two
// sides agree; both are offered for checking that very fact.
std::optional<int> reversal_eigenvalue(const IntVector& v, MatrixSide side);

struct OrthogonalityReport {
  Int raw_value;  // (beta(s;t)-f1) T^(t-s) M (beta(t;t)-f2)^T
  Int hh_value;   // <h1, h2>
  bool orthogonal = false;
};

// Evaluates the bilinear form both ways and insists the two agree
// (they are equal as polynomial identities, for *any* inputs — a
// mismatch is an arithmetic bug, not a property failure).  f1 and f2
// must be padded to t; s is the first side's vertex count.
OrthogonalityReport orthogonality_check(const IntVector& f1, int s,
                                        const IntVector& f2, int t);

// Necessary conditions for omega to be the long f-vector of the
// boundary complex of a simplicial polytope with m vertices: returns a
// list of anomaly tags, empty when all conditions hold.
//   degenerate_zero  — omega is identically zero
//   negative_entry   — some count is negative
//   empty_face_count — entry 0 differs from 1
//   vertex_count     — entry 1 differs from m
//   support_bound    — nonzero count beyond cardinality m-3
//   euler            — alternating sum differs from (-1)^(m+1)
std::vector<std::string> omega_anomalies(const IntVector& omega, int m);

}  // namespace omc
