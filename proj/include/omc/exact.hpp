#pragma once

// Exact integer / rational arithmetic used throughout the engine.
// Everything downstream (decompositions, f/h-vectors, bilinear forms)
// is computed over arbitrary-precision integers so no result is ever
// rounded or wrapped.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

// Thrown when an internal invariant that the mathematics guarantees is
// observed to fail (e.g. a decomposition coefficient outside {-1,0,1},
// or the raw and factored orthogonality values disagreeing).  Seeing
// this exception means a bug, not bad user input.
class InternalInconsistency : public std::logic_error {
public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error("internal inconsistency: " + what) {}
};

// Binomial coefficient C(n, k); 0 outside the triangle.  Backed by a
// lazily grown Pascal-triangle cache.
Int binomial(int n, int k);

// 64-bit FNV-1a over a byte string, rendered as 16 lowercase hex digits.
// Used to fingerprint instances and experiment inputs.
std::string fnv1a64_hex(std::string_view data);

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace omc
