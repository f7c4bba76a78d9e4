#include <gtest/gtest.h>

#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"
#include "qtab/toggle_solver.hpp"

using namespace qtab;

namespace {

// f(I) = c + sum_p c_p tq(p, I) on every ideal.
void expect_decomposition(const Poset& p, const Statistic& f, const ToggleSolution& s) {
  ASSERT_TRUE(s.consistent);
  for (Mask ideal : p.order_ideals()) {
    RatFunc rhs = s.c;
    for (std::size_t e = 0; e < p.size(); ++e) rhs += s.coefficients[e] * RatFunc(tq(p, e, ideal));
    EXPECT_EQ(rhs, RatFunc(f.eval(ideal))) << "ideal " << ideal;
  }
}

}  // namespace

TEST(Solver, TwoByTwo) {
  Poset p = build_rectangle(2, 2);
  Statistic f = stat_ddeg(p);
  ToggleSystem sys = build_system(p, f);
  EXPECT_EQ(sys.ideals.size(), 6U);
  EXPECT_EQ(sys.a[0].size(), 5U);
  ToggleSolution s = solve(sys);
  EXPECT_EQ(s.c, RatFunc(QPoly{1, 1}, QPoly{1, 0, 1}));
  EXPECT_EQ(s.c, RatFunc(qnum(2) * qnum(2), qnum(4)));
  expect_decomposition(p, f, s);
  EXPECT_EQ(predict_constant(p, f), s.c);
}

TEST(Solver, Chains) {
  for (unsigned n = 1; n <= 5; ++n) {
    Poset p = build_chain(n);
    ToggleSolution s = solve(build_system(p, stat_ddeg(p)));
    EXPECT_EQ(s.c, RatFunc(qnum(n), qnum(n + 1)));
    expect_decomposition(p, stat_ddeg(p), s);
  }
}

TEST(Solver, RectangleRowsAndStaircaseDiagonal) {
  for (const auto& rc : verify_refinements(build_rectangle(2, 3))) {
    EXPECT_TRUE(rc.ok()) << rc.statistic;
  }
  auto diag = verify_refinements(build_shifted({2, 1}));
  ASSERT_EQ(diag.size(), 1U);
  EXPECT_EQ(diag[0].statistic, "diag");
  EXPECT_EQ(diag[0].solution.c, RatFunc(qnum(2).substitute_power(2), qnum(4)));
  EXPECT_EQ(diag[0].solution.c, RatFunc(QPoly(1), QPoly{1, 1}));
  EXPECT_THROW(verify_refinements(build_shape({2, 1})), UnsupportedPoset);
}

TEST(Solver, Staircase) {
  Poset p = build_shifted({3, 2, 1});
  ToggleSolution s = solve(build_system(p, stat_ddeg(p)));
  EXPECT_EQ(s.c, RatFunc(qbinom(4, 2), qnum(6)));
  expect_decomposition(p, stat_ddeg(p), s);
}

TEST(Solver, ShapeTwoOneGenericAndAtOne) {
  Poset p = build_shape({2, 1});
  ToggleSystem sys = build_system(p, stat_ddeg(p));
  ToggleSolution generic = solve(sys);
  EXPECT_FALSE(generic.consistent);
  ASSERT_TRUE(generic.witness.has_value());
  EXPECT_TRUE(p.is_ideal(*generic.witness));
  ToggleSolution one = solve(specialize_q_one(sys));
  ASSERT_TRUE(one.consistent);
  EXPECT_EQ(one.c, RatFunc(1));
}

TEST(Solver, NonRectanglesAreInconsistent) {
  for (unsigned n = 3; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) {
      Poset p = build_shape(l);
      EXPECT_EQ(solve(build_system(p, stat_ddeg(p))).consistent, rectangle_dims(p).has_value())
          << partition_to_string(l);
    }
}

TEST(Solver, ShapeHelpers) {
  EXPECT_EQ(rectangle_dims(build_rectangle(2, 3)), (std::pair<unsigned, unsigned>{2, 3}));
  EXPECT_FALSE(rectangle_dims(build_shape({3, 1})).has_value());
  EXPECT_EQ(staircase_size(build_shifted({3, 2, 1})), 3U);
  EXPECT_FALSE(staircase_size(build_shifted({3, 1})).has_value());
}

TEST(Solver, RowCap) {
  Poset p = build_rectangle(3, 3);
  EXPECT_THROW(build_system(p, stat_ddeg(p), 10), SizeLimitExceeded);
}

TEST(Solver, ConstantStatistic) {
  Poset p = build_shape({3, 1});
  ToggleSolution s = solve(build_system(p, stat_constant(p, QPoly{2, 1})));
  EXPECT_EQ(s.c, RatFunc(QPoly{2, 1}));
}
