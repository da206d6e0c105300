#pragma once

// Tope sets of simple oriented matroids at desk scale, plus the two
// generators used everywhere in tests and experiments:
//
//   * hypercube(n)  — all 2^n sign vectors (the free case);
//   * realizable(g) — sign patterns of the open cells cut out of R^d
//     by the row vectors of an integer generator matrix, decided by
//     exact strict-cone feasibility.
//
// An instance owns a canonical, lexicographically sorted tope list
// ('+' before '-') and answers membership queries in O(1).  Validation
// checks the simplicity surrogates (no fixed or parallel/antiparallel
// coordinate pair across the tope set), central symmetry, and the
// connectivity of the flip graph.

#include "omc/exact.hpp"
#include "omc/sign_vector.hpp"
#include "omc/validation.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace omc {

// Largest ground size enumerated by default (2^14 sign vectors); every
// entry point that enumerates accepts an explicit override.
inline constexpr int kDefaultEnumCap = 14;

// Rows are vectors in Z^dim; one row per ground element.
struct GeneratorMatrix {
  int dim = 0;
  std::vector<IntVector> rows;

  int ground_size() const { return static_cast<int>(rows.size()); }
  std::string to_string() const;  // "[[1,2,0],[0,1,5]]" style
};

class OMInstance {
public:
  // Builds from an explicit tope list: sorts canonically, rejects
  // duplicates and length mismatches.  `source` is free-form metadata
  // describing where the set came from.
  OMInstance(int n, std::vector<SignVector> topes, std::string source);

  int ground_size() const { return n_; }
  const std::vector<SignVector>& topes() const { return topes_; }
  std::size_t tope_count() const { return topes_.size(); }
  const std::string& source() const { return source_; }

  bool contains(const SignVector& v) const;
  std::optional<std::size_t> index_of(const SignVector& v) const;

  // Topes reachable from v by a single sign flip.
  std::vector<SignVector> neighbors(const SignVector& v) const;

  // FNV-1a fingerprint of (n, canonical tope list); excludes `source`
  // so re-derived instances with different provenance still match the
  // cycles computed on them.
  const std::string& digest() const { return digest_; }

  bool operator==(const OMInstance& other) const {
    return n_ == other.n_ && topes_ == other.topes_ &&
           source_ == other.source_;
  }

private:
  int n_;
  std::vector<SignVector> topes_;
  std::string source_;
  std::string digest_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// All 2^n sign vectors.  n must be positive and at most `cap`.
OMInstance hypercube_instance(int n, int cap = kDefaultEnumCap);

// Topes of the arrangement generated by g's rows: every sign pattern s
// with a solution of  s_i * (g_i . x) > 0  for all i.  Requires nonzero,
// pairwise nonparallel rows (exact 2x2 minor test) and n <= cap.
OMInstance realizable_instance(const GeneratorMatrix& g,
                               int cap = kDefaultEnumCap);

// Number of open cells of a generic arrangement of n >= 1 vectors in
// general position in R^d:  2 * sum_{i<d} C(n-1, i).
Int region_count(int d, int n);

// Samples integer generator matrices (entries uniform in
// [-coord_bound, coord_bound], deterministic in `seed`) until the
// resulting arrangement is generic — detected exactly: the tope count
// must equal region_count(d, n).  Parallel or zero rows are resampled
// immediately.  Throws after `max_attempts` failed matrices.
OMInstance arrangement_instance(int d, int n, std::uint64_t seed,
                                int coord_bound = 50,
                                int cap = kDefaultEnumCap,
                                int max_attempts = 100);

// Checks: even tope count, central symmetry, full support per element
// (no element has a constant sign over all topes), no two elements
// identically equal or identically opposite across all topes, and a
// connected flip graph.
ValidationReport validate_instance(const OMInstance& inst);

// JSON round trip.  Files store {"n": .., "source": .., "topes": [..]}
// with the tope list in canonical order.
std::string instance_json_string(const OMInstance& inst);
void save_instance(const OMInstance& inst, const std::filesystem::path& path);
OMInstance load_instance(const std::filesystem::path& path);

}  // namespace omc
