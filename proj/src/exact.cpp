#include "omc/exact.hpp"

#include <cstdio>

namespace omc {

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Row-by-row Pascal triangle, grown on demand and kept for the
  // lifetime of the process.  Desk-scale inputs keep this tiny.
  static std::vector<IntVector> rows = {{Int(1)}};
  while (static_cast<int>(rows.size()) <= n) {
    const IntVector& prev = rows.back();
    IntVector next(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < next.size(); ++j)
      next[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(next));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace omc
