#pragma once

// Symmetric cycles in the flip graph of an instance: closed walks of
// length 2n visiting 2n distinct topes, with consecutive topes one sign
// flip apart and vertex k+n the negation of vertex k.  The vertex list
// of such a cycle spans R^n, which is what makes the decompositions in
// decompose.hpp well defined.

#include "omc/instance.hpp"
#include "omc/sign_vector.hpp"
#include "omc/validation.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace omc {

// Search-tree node budget for find_symmetric_cycle.
inline constexpr std::int64_t kDefaultSearchBudget = 1'000'000;

class SymmetricCycle {
public:
  // Structural requirements only (nonempty, even length, uniform vertex
  // size); whether the list is a genuine symmetric cycle of a given
  // instance is the job of validate_cycle.
  SymmetricCycle(std::string instance_digest, std::vector<SignVector> vertices);

  const std::vector<SignVector>& vertices() const { return vertices_; }

  // Half length n; the cycle has 2n vertices.
  int half_length() const { return static_cast<int>(vertices_.size() / 2); }

  int ground_size() const { return vertices_.front().size(); }

  // Vertex at position k, cyclically (any integer k is accepted).
  const SignVector& vertex(long long k) const;

  const std::string& instance_digest() const { return instance_digest_; }

  bool operator==(const SymmetricCycle&) const = default;

private:
  std::string instance_digest_;
  std::vector<SignVector> vertices_;
};

// The canonical symmetric cycle of the full hypercube: starting from
// `base`, flip the elements of `order` one at a time to produce the
// first half; the second half is the antipodal image.  `order` must be
// a permutation of 1..n and `inst` must contain all 2^n sign vectors.
SymmetricCycle distinguished_cycle(const OMInstance& inst,
                                   const SignVector& base,
                                   const std::vector<int>& order);

// Depth-first search for a symmetric cycle through `start`, trying flip
// elements in ascending order.  Each prefix must stay inside the tope
// set; distinctness and the antipodal closure come for free once n
// distinct elements have been flipped.  The budget counts search-tree
// nodes; exhausting it yields nullopt, which is *inconclusive* — it
// never certifies that no cycle exists.
std::optional<SymmetricCycle> find_symmetric_cycle(
    const OMInstance& inst, const SignVector& start,
    std::int64_t budget = kDefaultSearchBudget);

// Checks: vertex count 2n, vertices distinct, all vertices topes of the
// instance (and the digest matches), consecutive separation exactly one
// element, antipodal pairing, and each element flipped exactly twice
// around the cycle.
ValidationReport validate_cycle(const OMInstance& inst,
                                const SymmetricCycle& cycle);

// JSON round trip: {"instance_digest": .., "vertices": [..]} with the
// vertices in cycle order.
std::string cycle_json_string(const SymmetricCycle& cycle);
void save_cycle(const SymmetricCycle& cycle, const std::filesystem::path& path);
SymmetricCycle load_cycle(const std::filesystem::path& path);

}  // namespace omc
