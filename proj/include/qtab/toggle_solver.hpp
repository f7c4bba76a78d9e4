#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtab/distributions.hpp"
#include "qtab/linsolve.hpp"

namespace qtab {

/// f(I) = c + sum_p c_p tq(p, I), one row per order ideal. Column 0 is c,
/// column p+1 is c_p.
struct ToggleSystem {
  std::vector<Mask> ideals;
  PolyMatrix a;
  std::vector<QPoly> rhs;
};

struct ToggleSolution {
  bool consistent = false;
  RatFunc c;
  /// c_p, with free unknowns set to zero, so not canonical.
  std::vector<RatFunc> coefficients;
  std::optional<Mask> witness;
};

/// Throws SizeLimitExceeded when |J(P)| exceeds row_cap.
ToggleSystem build_system(const Poset& p, const Statistic& f, std::size_t row_cap = 100000);
ToggleSolution solve(const ToggleSystem& system);
/// Same system with every entry evaluated at q = 1.
ToggleSystem specialize_q_one(const ToggleSystem& system);

/// E_{mu_rk}(f), the value c must take whenever the system is consistent.
/// Throws NotGraded.
RatFunc predict_constant(const Poset& p, const Statistic& f);

struct RefinementCheck {
  std::string statistic;  // "row:i" or "diag"
  RatFunc expected;
  ToggleSolution solution;
  bool ok() const { return solution.consistent && solution.c == expected; }
};

/// Rows of a rectangle a x b: c = q^{a-i}[b]/[a+b]. Shifted staircase of
/// size k: main diagonal, c = [k]_{q^2}/[2k]. Other posets: UnsupportedPoset.
std::vector<RefinementCheck> verify_refinements(const Poset& p);

/// Rectangle rows and columns from a shape origin; nullopt for other posets.
std::optional<std::pair<unsigned, unsigned>> rectangle_dims(const Poset& p);
/// k for a shifted staircase (k, k-1, ..., 1); nullopt otherwise.
std::optional<unsigned> staircase_size(const Poset& p);

}  // namespace qtab
