#include "omc/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace omc {

namespace {

// Divide a row by the gcd of its entries (sign preserved).  Rows are
// rays; normalizing collapses positive multiples so dedup can bite.
void normalize(IntVector& row) {
  Int g = 0;
  for (const Int& v : row) g = boost::multiprecision::gcd(g, abs(v));
  if (g > 1)
    for (Int& v : row) v /= g;
}

bool is_zero(const IntVector& row) {
  for (const Int& v : row)
    if (v != 0) return false;
  return true;
}

}  // namespace

bool strict_cone_nonempty(std::vector<IntVector> rows) {
  if (rows.empty()) return true;  // no constraints
  std::size_t dim = rows.front().size();
  for (const IntVector& r : rows)
    if (r.size() != dim)
      throw std::invalid_argument("strict_cone_nonempty: ragged rows");

  for (IntVector& r : rows) normalize(r);

  // Eliminate the last variable at each stage.  A zero row encountered
  // at any point reads 0 > 0, an outright contradiction.
  while (true) {
    for (const IntVector& r : rows)
      if (is_zero(r)) return false;
    if (dim == 0 || rows.empty()) return true;

    std::size_t col = dim - 1;
    std::vector<IntVector> pos, neg;
    std::set<IntVector> next;
    for (IntVector& r : rows) {
      const Int& c = r[col];
      if (c > 0) {
        pos.push_back(std::move(r));
      } else if (c < 0) {
        neg.push_back(std::move(r));
      } else {
        r.pop_back();
        next.insert(std::move(r));
      }
    }
    // Each pos/neg pair combines into a strict inequality free of the
    // eliminated variable: a[col]*b - b[col]*a with a[col] > 0 > b[col].
    for (const IntVector& a : pos) {
      for (const IntVector& b : neg) {
        IntVector comb(col);
        for (std::size_t j = 0; j < col; ++j)
          comb[j] = a[col] * b[j] - b[col] * a[j];
        normalize(comb);
        next.insert(std::move(comb));
      }
    }
    rows.assign(std::make_move_iterator(next.begin()),
                std::make_move_iterator(next.end()));
    --dim;
  }
}

}  // namespace omc
