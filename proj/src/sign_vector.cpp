#include "omc/sign_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace omc {

SignVector::SignVector(std::vector<std::int8_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("sign vector must be nonempty");
  for (std::int8_t e : entries_)
    if (e != 1 && e != -1)
      throw std::invalid_argument("sign vector entries must be +1 or -1");
}

SignVector SignVector::all_plus(int n) {
  if (n <= 0) throw std::invalid_argument("ground size must be positive");
  return SignVector(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1));
}

SignVector SignVector::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty sign vector text");
  std::vector<std::int8_t> entries;
  entries.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      entries.push_back(1);
    } else if (c == '-') {
      entries.push_back(-1);
    } else {
      throw std::invalid_argument("illegal character '" + std::string(1, c) +
                                  "' at position " + std::to_string(i + 1) +
                                  " (expected '+' or '-')");
    }
  }
  return SignVector(std::move(entries));
}

int SignVector::sign(int element) const {
  if (element < 1 || element > size())
    throw std::out_of_range("element " + std::to_string(element) +
                            " outside ground set {1.." +
                            std::to_string(size()) + "}");
  return entries_[static_cast<std::size_t>(element - 1)];
}

SignVector SignVector::negated() const {
  std::vector<std::int8_t> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out[i] = static_cast<std::int8_t>(-entries_[i]);
  return SignVector(std::move(out));
}

SignVector SignVector::flipped(int element) const {
  sign(element);  // range check
  std::vector<std::int8_t> out = entries_;
  out[static_cast<std::size_t>(element - 1)] =
      static_cast<std::int8_t>(-out[static_cast<std::size_t>(element - 1)]);
  return SignVector(std::move(out));
}

std::string SignVector::to_string() const {
  std::string s;
  s.reserve(entries_.size());
  for (std::int8_t e : entries_) s.push_back(e > 0 ? '+' : '-');
  return s;
}

std::uint64_t SignVector::packed() const {
  if (size() > 64)
    throw std::out_of_range("packed() requires ground size <= 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 0) bits |= (std::uint64_t{1} << i);
  return bits;
}

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
  // '+' < '-' in ASCII, so lexicographic text order means a positive
  // entry sorts before a negative one at the first disagreement.
  std::size_t common = std::min(entries_.size(), other.entries_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (entries_[i] != other.entries_[i])
      return entries_[i] > other.entries_[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return entries_.size() <=> other.entries_.size();
}

GroundSubset::GroundSubset(int ground_size, std::vector<int> members)
    : n_(ground_size), members_(std::move(members)) {
  if (n_ < 0) throw std::invalid_argument("ground size must be nonnegative");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int e : members_)
    if (e < 1 || e > n_)
      throw std::invalid_argument("subset member " + std::to_string(e) +
                                  " outside ground set {1.." +
                                  std::to_string(n_) + "}");
}

bool GroundSubset::contains(int element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

GroundSubset GroundSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n_) - members_.size());
  for (int e = 1; e <= n_; ++e)
    if (!contains(e)) rest.push_back(e);
  return GroundSubset(n_, std::move(rest));
}

std::uint32_t GroundSubset::as_bits() const {
  if (n_ > 32) throw std::out_of_range("as_bits() requires ground size <= 32");
  std::uint32_t bits = 0;
  for (int e : members_) bits |= (std::uint32_t{1} << (e - 1));
  return bits;
}

SignVector negate(const SignVector& v) { return v.negated(); }

SignVector reorient(const SignVector& v, const SignVector& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("reorient: ground size mismatch");
  std::vector<std::int8_t> out(static_cast<std::size_t>(v.size()));
  for (int e = 1; e <= v.size(); ++e)
    out[static_cast<std::size_t>(e - 1)] =
        static_cast<std::int8_t>(v.sign(e) * w.sign(e));
  return SignVector(std::move(out));
}

GroundSubset separation_set(const SignVector& u, const SignVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("separation_set: ground size mismatch");
  std::vector<int> diff;
  for (int e = 1; e <= u.size(); ++e)
    if (u.sign(e) != v.sign(e)) diff.push_back(e);
  return GroundSubset(u.size(), std::move(diff));
}

IntVector tope_sum(const std::vector<SignVector>& vectors) {
  if (vectors.empty())
    throw std::invalid_argument("tope_sum: empty list");
  int n = vectors.front().size();
  IntVector acc(static_cast<std::size_t>(n), Int(0));
  for (const SignVector& v : vectors) {
    if (v.size() != n)
      throw std::invalid_argument("tope_sum: ground size mismatch");
    for (int e = 1; e <= n; ++e)
      acc[static_cast<std::size_t>(e - 1)] += v.sign(e);
  }
  return acc;
}

}  // namespace omc
