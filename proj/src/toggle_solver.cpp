#include "qtab/toggle_solver.hpp"

#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"

namespace qtab {

ToggleSystem build_system(const Poset& p, const Statistic& f, std::size_t row_cap) {
  if (!(f.poset == signature(p))) throw PosetMismatch("statistic '" + f.name + "' belongs to another poset");
  ToggleSystem s;
  s.ideals = p.order_ideals();
  if (s.ideals.size() > row_cap)
    throw SizeLimitExceeded("toggle system has " + std::to_string(s.ideals.size()) +
                            " rows, cap is " + std::to_string(row_cap));
  for (Mask m : s.ideals) {
    std::vector<QPoly> row{QPoly(1)};
    for (std::size_t e = 0; e < p.size(); ++e) row.push_back(tq(p, e, m));
    s.a.push_back(std::move(row));
    s.rhs.push_back(f.eval(m));
  }
  return s;
}

ToggleSolution solve(const ToggleSystem& system) {
  LinearSolution ls = solve_linear_system(system.a, system.rhs);
  ToggleSolution out;
  out.consistent = ls.consistent;
  if (!ls.consistent) {
    out.witness = system.ideals.at(*ls.witness_row);
    return out;
  }
  out.c = ls.x.at(0);
  out.coefficients.assign(ls.x.begin() + 1, ls.x.end());
  return out;
}

ToggleSystem specialize_q_one(const ToggleSystem& system) {
  ToggleSystem s = system;
  for (auto& row : s.a)
    for (auto& v : row) v = QPoly(v.eval(Integer(1)));
  for (auto& v : s.rhs) v = QPoly(v.eval(Integer(1)));
  return s;
}

RatFunc predict_constant(const Poset& p, const Statistic& f) { return expectation(ensemble_rank(p), f); }

std::optional<std::pair<unsigned, unsigned>> rectangle_dims(const Poset& p) {
  const Origin& o = p.origin();
  if (o.kind != OriginKind::shape || o.partition.empty()) return std::nullopt;
  for (unsigned part : o.partition)
    if (part != o.partition[0]) return std::nullopt;
  return std::pair(static_cast<unsigned>(o.partition.size()), o.partition[0]);
}

std::optional<unsigned> staircase_size(const Poset& p) {
  const Origin& o = p.origin();
  if (o.kind != OriginKind::shifted || o.partition.empty()) return std::nullopt;
  const unsigned k = static_cast<unsigned>(o.partition.size());
  for (unsigned i = 0; i < k; ++i)
    if (o.partition[i] != k - i) return std::nullopt;
  return k;
}

std::vector<RefinementCheck> verify_refinements(const Poset& p) {
  std::vector<RefinementCheck> out;
  if (auto dims = rectangle_dims(p)) {
    auto [a, b] = *dims;
    for (unsigned i = 1; i <= a; ++i) {
      RefinementCheck rc;
      rc.statistic = "row:" + std::to_string(i);
      rc.expected = RatFunc(QPoly::q_power(a - i) * qnum(b), qnum(a + b));
      rc.solution = solve(build_system(p, stat_row_ddeg(p, i)));
      out.push_back(std::move(rc));
    }
    return out;
  }
  if (auto k = staircase_size(p)) {
    RefinementCheck rc;
    rc.statistic = "diag";
    rc.expected = RatFunc(qnum(*k).substitute_power(2), qnum(2 * *k));
    rc.solution = solve(build_system(p, stat_diagonal_ddeg(p)));
    out.push_back(std::move(rc));
    return out;
  }
  throw UnsupportedPoset("refinements exist only for rectangles and shifted staircases");
}

}  // namespace qtab
