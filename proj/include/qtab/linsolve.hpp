#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qtab/ratfunc.hpp"

namespace qtab {

using PolyMatrix = std::vector<std::vector<QPoly>>;

struct LinearSolution {
  bool consistent = false;
  /// One solution, free variables set to zero. Empty when inconsistent.
  std::vector<RatFunc> x;
  /// Original index of a row reduced to 0 = nonzero.
  std::optional<std::size_t> witness_row;
  std::size_t rank = 0;
};

/// Solves A x = b over Q(q) by fraction-free (Bareiss) elimination.
/// Throws DimensionMismatch for ragged A or a b of the wrong length.
LinearSolution solve_linear_system(const PolyMatrix& a, const std::vector<QPoly>& b);

}  // namespace qtab
