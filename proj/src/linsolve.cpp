#include "qtab/linsolve.hpp"

#include <numeric>

#include "qtab/errors.hpp"

namespace qtab {

LinearSolution solve_linear_system(const PolyMatrix& a, const std::vector<QPoly>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DimensionMismatch("rhs length differs from row count");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw DimensionMismatch("ragged coefficient matrix");

  // Augmented matrix; column `cols` holds the rhs and is never a pivot column.
  PolyMatrix m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::vector<std::size_t> origin(rows);
  std::iota(origin.begin(), origin.end(), 0);

  std::vector<std::size_t> pivot_cols;
  QPoly prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (best == rows || m[i][c].degree() < m[best][c].degree()) best = i;
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    std::swap(origin[r], origin[best]);
    const QPoly& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const QPoly factor = m[i][c];
      for (std::size_t j = c + 1; j <= cols; ++j) {
        QPoly v = piv * m[i][j];
        if (!factor.is_zero()) v -= factor * m[r][j];
        m[i][j] = exact_div(v, prev);
      }
      m[i][c] = QPoly();
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (!m[i][cols].is_zero()) {
      out.witness_row = origin[i];
      return out;
    }
  }
  out.consistent = true;
  out.x.assign(cols, RatFunc());
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    RatFunc acc(m[k][cols]);
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!m[k][j].is_zero() && !out.x[j].is_zero()) acc -= RatFunc(m[k][j]) * out.x[j];
    out.x[c] = acc / RatFunc(m[k][c]);
  }
  return out;
}

}  // namespace qtab
