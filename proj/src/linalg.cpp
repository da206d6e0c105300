#include "omc/linalg.hpp"

#include <stdexcept>

namespace omc {

std::optional<std::vector<Rational>> bareiss_solve(
    std::vector<IntVector> matrix, IntVector rhs) {
  const std::size_t n = matrix.size();
  if (n == 0 || rhs.size() != n)
    throw std::invalid_argument("bareiss_solve: bad dimensions");
  for (const IntVector& row : matrix)
    if (row.size() != n)
      throw std::invalid_argument("bareiss_solve: matrix not square");

  // Work on the augmented matrix [A | b].
  std::vector<IntVector> m(n, IntVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = matrix[i][j];
    m[i][n] = rhs[i];
  }

  // Fraction-free elimination: every division below is exact by the
  // Bareiss identity, with div_prev the pivot of the previous step.
  Int div_prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return std::nullopt;  // singular
      std::swap(m[k], m[swap_row]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / div_prev;
      m[i][k] = 0;
    }
    div_prev = m[k][k];
  }
  if (m[n - 1][n - 1] == 0) return std::nullopt;

  // Rational back substitution on the (upper triangular) result.
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

ConsistentSolve solve_in_span(const std::vector<IntVector>& columns,
                              const IntVector& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  for (const IntVector& c : columns)
    if (c.size() != rows)
      throw std::invalid_argument("solve_in_span: column length mismatch");

  // Augmented rational matrix, equations as rows.
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rational(columns[j][i]);
    m[i][cols] = Rational(rhs[i]);
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  ConsistentSolve out;
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return out;  // row reads 0 = nonzero
  out.consistent = true;
  out.coefficients.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    out.coefficients[pivot_col_of_row[i]] = m[i][cols];
  return out;
}

}  // namespace omc
