#pragma once

// Abstract simplicial complexes on ground set {1..n}, given by facet
// generators, together with the long face-count vectors the spectral
// checks consume.
//
// A "long" f-vector at padding t has t+1 entries indexed by face
// cardinality 0..t (entry 0 counts the empty face, entry 1 vertices,
// and so on), regardless of the complex's dimension.  Padding lets
// complexes of different sizes live in the same coordinate space.

#include "omc/decompose.hpp"
#include "omc/exact.hpp"
#include "omc/sign_vector.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace omc {

// Ground sizes above this would make face enumeration (2^n bitmask
// walks) unreasonable for a desk tool.
inline constexpr int kMaxComplexGround = 20;

class SimplicialComplex {
public:
  // Keeps the inclusion-maximal generators (duplicates and faces of
  // other generators are absorbed silently).  An empty generator list —
  // or one whose only generator is the empty set — yields the complex
  // whose sole face is the empty face.
  SimplicialComplex(int ground_size, std::vector<GroundSubset> generators);

  int ground_size() const { return n_; }

  // Inclusion-maximal faces, sorted lexicographically by member list.
  const std::vector<GroundSubset>& facets() const { return facets_; }

  // Every face (downward closure of the facets) as bitmasks, sorted.
  // Always contains the empty face.
  std::vector<std::uint32_t> faces() const;

  std::size_t face_count() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  int n_;
  std::vector<GroundSubset> facets_;
};

// The complex attached to a decomposition: one facet generator per
// member Q of the decomposition, namely the elements on which Q agrees
// with the decomposed tope.  `tope` must match the decomposition's.
SimplicialComplex lambda_complex(const SignVector& tope,
                                 const Decomposition& decomposition);

// Long f-vector of the complex at padding t; requires t >= ground size.
IntVector long_f_vector(const SimplicialComplex& complex, int t);

// Long f-vector (padding t) of the full simplex on m vertices:
// entry j is C(m, j).  Requires 0 < m <= t.
IntVector beta_vector(int m, int t);

// Boundary of the k-vertex simplex on ground {1..k}: all proper subsets
// of {1..k}, generated by the (k-1)-subsets.  Requires 1 <= k <= t; the
// complex is built on ground size t so it pads compatibly.
SimplicialComplex simplex_boundary(int k, int t);

// JSON round trip: {"n": .., "facets": [[..], ..]} with facets in the
// canonical sorted order.
std::string complex_json_string(const SimplicialComplex& complex);
void save_complex(const SimplicialComplex& complex,
                  const std::filesystem::path& path);
SimplicialComplex load_complex(const std::filesystem::path& path);

}  // namespace omc
