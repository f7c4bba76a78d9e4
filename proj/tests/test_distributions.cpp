#include <gtest/gtest.h>

#include "qtab/distributions.hpp"
#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"
#include "qtab/toggle_bijection.hpp"

using namespace qtab;

namespace {

std::vector<Poset> corpus() {
  std::vector<Poset> c;
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) c.push_back(build_shape(l));
  c.push_back(build_shifted({3, 2, 1}));
  c.push_back(build_propeller(2));
  return c;
}

}  // namespace

TEST(Toggles, Basics) {
  Poset p = build_rectangle(2, 2);
  EXPECT_TRUE(tout(p, 0, 0b0001));
  EXPECT_FALSE(tout(p, 0, 0b0011));
  EXPECT_TRUE(tin(p, 3, 0b0111));
  EXPECT_FALSE(tin(p, 3, 0b0011));
  EXPECT_EQ(tq(p, 3, 0b0111), QPoly(1));
  EXPECT_EQ(tq(p, 1, 0b0111), (QPoly{0, -1}));
  EXPECT_EQ(tq(p, 0, 0b0111), QPoly());
  EXPECT_EQ(ddeg(p, 0b0111), 2U);
}

TEST(Ensembles, RppTwoByTwoMatchesUniform) {
  Poset p = build_rectangle(2, 2);
  WeightedEnsemble e = ensemble_rpp(p, 1, RppMode::direct);
  const QPoly z{1, 1, 2, 1, 1};
  EXPECT_EQ(e.normalizer, z);
  EXPECT_EQ(e.probability(0b0000), RatFunc(QPoly::q_power(4), z));
  EXPECT_EQ(e.probability(0b0001), RatFunc(QPoly::q_power(3), z));
  EXPECT_EQ(e.probability(0b0011), RatFunc(QPoly::q_power(2), z));
  EXPECT_EQ(e.probability(0b0101), RatFunc(QPoly::q_power(2), z));
  EXPECT_EQ(e.probability(0b0111), RatFunc(QPoly::q_power(1), z));
  EXPECT_EQ(e.probability(0b1111), RatFunc(QPoly(1), z));
  EXPECT_EQ(e.weights, ensemble_uniform(p).weights);
  EXPECT_EQ(expectation(e, stat_ddeg(p)), RatFunc(QPoly{1, 2, 2, 1}, z));
}

TEST(Ensembles, LinTwoByTwo) {
  Poset p = build_rectangle(2, 2);
  WeightedEnsemble e = ensemble_lin(p);
  const QPoly c{1, 0, 1};
  EXPECT_EQ(e.normalizer, qnum(5) * c);
  EXPECT_EQ(e.weight(0b0000), QPoly::q_power(4) * c);
  EXPECT_EQ(e.weight(0b0001), QPoly::q_power(3) * c);
  EXPECT_EQ(e.weight(0b0011), QPoly::q_power(2));
  EXPECT_EQ(e.weight(0b0101), QPoly::q_power(2));
  EXPECT_EQ(e.weight(0b0111), (QPoly{0, 1, 0, 0, 1}));
  EXPECT_EQ(e.weight(0b1111), (QPoly{1, 0, 0, 1}));
  EXPECT_EQ(expectation(e, stat_ddeg(p)), RatFunc(QPoly{1, 2, 2, 2, 2, 1}, qnum(5) * c));
}

TEST(Ensembles, SingletonWithTwoLevels) {
  Poset p = build_chain(1);
  WeightedEnsemble e = ensemble_rpp(p, 2, RppMode::direct);
  EXPECT_EQ(e.weight(0), (QPoly{0, 1, 1, 1}));
  EXPECT_EQ(e.weight(1), (QPoly{1, 1, 1}));
  EXPECT_EQ(e.normalizer, qnum(2) * qnum(3));
  EXPECT_THROW(ensemble_rpp(p, 0, RppMode::direct), std::invalid_argument);
}

TEST(Ensembles, ConsistentAndToggleSymmetric) {
  for (const Poset& p : corpus()) {
    std::vector<WeightedEnsemble> es = {ensemble_uniform(p), ensemble_lin(p), ensemble_rpp(p, 2, RppMode::direct)};
    if (p.is_graded()) es.push_back(ensemble_rank(p));
    for (const auto& e : es) {
      EXPECT_TRUE(e.is_consistent());
      EXPECT_TRUE(check_toggle_symmetry(e, p).symmetric) << p.origin().name;
    }
  }
}

TEST(Ensembles, PointMassIsNotSymmetric) {
  Poset p = build_rectangle(2, 2);
  WeightedEnsemble e = ensemble_point_mass(p, 0b0001);
  EXPECT_EQ(e.probability(0b0001), RatFunc(1));
  EXPECT_FALSE(check_toggle_symmetry(e, p).symmetric);
  EXPECT_THROW(ensemble_point_mass(p, 0b0010), InvalidPoset);
}

TEST(Ensembles, RankDistribution) {
  Poset p = build_chain(3);
  WeightedEnsemble e = ensemble_rank(p);
  EXPECT_EQ(e.normalizer, qnum(4));
  EXPECT_EQ(e.weight(0), QPoly::q_power(3));
  EXPECT_EQ(e.weight(0b111), QPoly(1));
  EXPECT_THROW(ensemble_rank(build_shape({2, 1, 1})), NotGraded);
}

TEST(Ensembles, MismatchedStatistic) {
  WeightedEnsemble e = ensemble_lin(build_rectangle(2, 2));
  EXPECT_THROW(expectation(e, stat_ddeg(build_shape({3, 1}))), PosetMismatch);
}

TEST(Expectations, BsvCorollaries) {
  for (const Poset& p : corpus()) {
    const unsigned n = static_cast<unsigned>(p.size());
    RatFunc lin = expectation(ensemble_lin(p), stat_ddeg(p));
    EXPECT_EQ(lin, RatFunc(gf_bsv(p).at_t_one(), qnum(n + 1) * gf_comaj(p))) << p.origin().name;
    for (unsigned m = 1; m <= 3; ++m) {
      RatFunc rpp = expectation(ensemble_rpp(p, m, RppMode::direct), stat_ddeg(p));
      EXPECT_EQ(rpp, RatFunc(gf_bsv_rpp(p, m).at_t_one(), qnum(m) * gf_rpp(p, m))) << p.origin().name;
    }
  }
}

TEST(Expectations, RowStatisticsSumToDownDegree) {
  Poset p = build_rectangle(3, 2);
  Statistic total = stat_ddeg(p);
  for (Mask ideal : p.order_ideals()) {
    QPoly s;
    for (unsigned r = 1; r <= 3; ++r) s += stat_row_ddeg(p, r).eval(ideal);
    EXPECT_EQ(s, total.eval(ideal));
  }
  EXPECT_THROW(stat_diagonal_ddeg(build_e6()), UnsupportedRefinement);
}

TEST(Involution, SingletonPair) {
  Poset p = build_chain(1);
  auto [pi, k] = involution_rpp(p, 0, Rpp{1}, 0, 2);
  EXPECT_EQ(pi, Rpp{0});
  EXPECT_EQ(k, 0U);
  // q^{1+0} * tq(empty) + q^{0+0} * tq({p}) cancels
  EXPECT_TRUE((QPoly::q_power(1) * tq(p, 0, 0) + tq(p, 0, 1)).is_zero());
}

TEST(Involution, SignReversingPairing) {
  for (const Poset& p : {build_shape({2, 1}), build_rectangle(2, 2), build_shape({3, 1}), build_shifted({3, 2, 1})}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for_each_rpp(p, m, [&](const Rpp& pi) {
        for (unsigned k = 0; k < m; ++k) {
          const Mask ideal = ideal_at_level(pi, k);
          for (std::size_t e = 0; e < p.size(); ++e) {
            auto [pi2, k2] = involution_rpp(p, e, pi, k, m);
            ASSERT_LT(k2, m);
            ASSERT_TRUE(is_rpp(p, pi2, m));
            auto back = involution_rpp(p, e, pi2, k2, m);
            EXPECT_EQ(back.first, pi);
            EXPECT_EQ(back.second, k);
            const Mask ideal2 = ideal_at_level(pi2, k2);
            const long w = rpp_size(pi) + k, w2 = rpp_size(pi2) + k2;
            if (tout(p, e, ideal)) {
              EXPECT_TRUE(tin(p, e, ideal2));
              EXPECT_EQ(w + 1, w2);
            } else if (tin(p, e, ideal)) {
              EXPECT_TRUE(tout(p, e, ideal2));
              EXPECT_EQ(w - 1, w2);
            } else {
              EXPECT_EQ(pi2, pi);
              EXPECT_EQ(k2, k);
            }
          }
        }
      });
    }
  }
}

TEST(Theta, StarIsDualThetaAtInverseQ) {
  for (const Poset& p : corpus()) {
    for_each_linear_extension(p, [&](const LinearExtension& t) {
      const unsigned n = static_cast<unsigned>(t.size());
      LinearExtension dual = dual_extension(t);
      for (unsigned i = 0; i <= n; ++i)
        EXPECT_EQ(theta_star(t, i), (Laurent{-static_cast<long>(theta_exponent(dual, n - i)), QPoly(1)}));
    });
  }
}

TEST(Theta, StarSingletonLimit) {
  // For q > 1 the bounded-RPP weights of a single point concentrate on the
  // empty ideal in ratio q : 1.
  LinearExtension t = linear_extensions(build_chain(1))[0];
  EXPECT_EQ(theta_star(t, 0).shift - theta_star(t, 1).shift, 1);
}

TEST(Theta, MWeightFactorization) {
  Poset p = build_shape({3, 2});
  for (unsigned m = 1; m <= 4; ++m) {
    EXPECT_EQ(ensemble_rpp(p, m, RppMode::direct).weights, ensemble_rpp(p, m, RppMode::via_theta_m).weights);
  }
}
