#pragma once

// Sign vectors over a ground set E_n = {1..n} and small subsets of E_n.
//
// A SignVector is a full-support vector with entries in {+1,-1}; these
// are the topes the rest of the engine works with.  Elements are
// 1-indexed everywhere in the public interface.  The canonical textual
// form uses '+' and '-' only, and the canonical order on sign vectors
// is the lexicographic order of that text ('+' sorts before '-').

#include "omc/exact.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omc {

class SignVector {
public:
  // entries[i] must be +1 or -1; the vector must be nonempty.
  explicit SignVector(std::vector<std::int8_t> entries);

  static SignVector all_plus(int n);

  // Parse from text over the two-letter alphabet "+-".  Any other
  // character (including '1'/'0') is rejected; the error names the
  // offending character and its 1-indexed position.
  static SignVector parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }

  // Sign of element e, 1-indexed; +1 or -1.
  int sign(int element) const;

  bool is_negative(int element) const { return sign(element) < 0; }

  SignVector negated() const;

  // Copy with the sign of a single element flipped.
  SignVector flipped(int element) const;

  std::string to_string() const;

  // Packs signs into bits (bit e-1 set iff element e is negative).
  // Only valid for n <= 64; used for fast membership tables.
  std::uint64_t packed() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

  // Canonical order: lexicographic on the "+-" text, '+' < '-'.
  std::strong_ordering operator<=>(const SignVector& other) const;

private:
  std::vector<std::int8_t> entries_;
};

// A subset of the ground set {1..n}, kept sorted and deduplicated.
class GroundSubset {
public:
  GroundSubset(int ground_size, std::vector<int> members);

  int ground_size() const { return n_; }
  int cardinality() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int element) const;
  GroundSubset complement() const;

  // Bitmask with bit e-1 set for each member e; requires n <= 32.
  std::uint32_t as_bits() const;

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;

private:
  int n_;
  std::vector<int> members_;
};

SignVector negate(const SignVector& v);

// Entrywise product: flips v's sign on exactly the elements where w is
// negative.  Both arguments must share a ground size.
SignVector reorient(const SignVector& v, const SignVector& w);

// S(u, v) = elements on which u and v disagree.
GroundSubset separation_set(const SignVector& u, const SignVector& v);

// Entrywise integer sum of a nonempty list of sign vectors of equal size.
IntVector tope_sum(const std::vector<SignVector>& vectors);

}  // namespace omc
