#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qtab/distributions.hpp"
#include "qtab/errors.hpp"
#include "qtab/linext.hpp"
#include "qtab/ppart.hpp"
#include "qtab/qnumbers.hpp"
#include "qtab/tableau_text.hpp"

using namespace qtab;

namespace {

std::vector<Poset> small_corpus() {
  std::vector<Poset> c;
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) c.push_back(build_shape(l));
  c.push_back(build_shifted({3, 2, 1}));
  c.push_back(build_shifted({4, 2}));
  c.push_back(build_propeller(2));
  return c;
}

}  // namespace

TEST(LinearExtensions, TwoByTwo) {
  Poset p = build_rectangle(2, 2);
  auto all = linear_extensions(p);
  ASSERT_EQ(all.size(), 2U);
  EXPECT_EQ(comaj(all[0]), 0U);
  EXPECT_EQ(comaj(all[1]), 2U);
  EXPECT_EQ(descents(all[1]), std::vector<unsigned>{2});
  EXPECT_EQ(gf_comaj(p), (QPoly{1, 0, 1}));
}

TEST(LinearExtensions, ShiftedStaircase) {
  Poset p = build_shifted({3, 2, 1});
  EXPECT_EQ(gf_comaj(p), (QPoly{1, 0, 0, 1}));
  LinearExtension t = linext_from_text(p, "1,2,4/3,5/6");
  EXPECT_EQ(descents(t), std::vector<unsigned>{3});
}

TEST(LinearExtensions, MatchPermutationFilter) {
  for (const Poset& p : small_corpus()) {
    auto brute = oracle::linear_extensions_by_permutations(p);
    std::set<std::vector<unsigned>> want(brute.begin(), brute.end()), got;
    QPoly gf;
    for (const auto& t : linear_extensions(p)) {
      EXPECT_TRUE(is_linear_extension(p, t));
      got.insert(t.value);
    }
    for (const auto& v : brute) gf.add_monomial(1, oracle::comaj_of_values(v));
    EXPECT_EQ(got, want) << p.origin().name;
    EXPECT_EQ(gf_comaj(p), gf) << p.origin().name;
    EXPECT_EQ(count_linear_extensions(p), Integer(static_cast<unsigned long>(brute.size())));
  }
}

TEST(LinearExtensions, LexicographicOrder) {
  auto all = linear_extensions(build_shape({3, 2}));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].word, all[i].word);
}

TEST(LinearExtensions, ComajAtExample) {
  Poset p = build_rectangle(3, 3);
  LinearExtension t = linext_from_text(p, "1,3,6/2,5,8/4,7,9");
  EXPECT_EQ(descents(t), (std::vector<unsigned>{2, 4, 5, 7}));
  EXPECT_EQ(t.prefix_ideal(3), Mask(0b1011));
  EXPECT_EQ(comaj_at(t, 3), 24U);
  EXPECT_EQ(theta(t, 3), QPoly::q_power(25));
  for (unsigned m = 1; m <= 3; ++m) EXPECT_EQ(theta_m(t, 3, m), QPoly::q_power(25) * qbinom(m + 5, 10));
}

TEST(LinearExtensions, FxPermutation) {
  EXPECT_EQ(f_x_permutation(6, {}), (std::vector<unsigned>{6, 5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(f_x_permutation(6, {2}), (std::vector<unsigned>{6, 5, 0, 4, 3, 2, 1}));
  EXPECT_EQ(f_x_permutation(6, {2, 4}), (std::vector<unsigned>{6, 5, 0, 4, 1, 3, 2}));
  EXPECT_EQ(f_x_permutation(6, {2, 4, 5}), (std::vector<unsigned>{6, 5, 0, 4, 1, 2, 3}));
  for (unsigned n = 1; n <= 7; ++n) {
    for (Mask x = 0; x < (Mask(1) << (n - 1)); ++x) {
      std::vector<unsigned> xs;
      for (unsigned j = 1; j < n; ++j)
        if ((x >> (j - 1)) & 1U) xs.push_back(j);
      auto f = f_x_permutation(n, xs);
      EXPECT_EQ(f, f_x_by_rotation(n, xs));
      std::sort(f.begin(), f.end());
      for (unsigned i = 0; i <= n; ++i) EXPECT_EQ(f[i], i);
    }
  }
}

TEST(LinearExtensions, ThetaSumsToNormalizer) {
  for (const Poset& p : small_corpus()) {
    QPoly s;
    for_each_linear_extension(p, [&](const LinearExtension& t) {
      for (unsigned i = 0; i <= t.size(); ++i) s += theta(t, i);
    });
    EXPECT_EQ(s, qnum(static_cast<unsigned>(p.size()) + 1) * gf_comaj(p)) << p.origin().name;
  }
}

TEST(LinearExtensions, LabelingIndependence) {
  // Shape (3,2) with the cells numbered down columns instead of along rows.
  Poset by_columns(5, {{0, 1}, {0, 2}, {2, 3}, {1, 3}, {2, 4}});
  Poset by_rows = build_shape({3, 2});
  ASSERT_TRUE(isomorphic(by_columns, by_rows));
  EXPECT_EQ(gf_comaj(by_columns), gf_comaj(by_rows));
  for (unsigned m = 1; m <= 3; ++m) EXPECT_EQ(gf_rpp(by_columns, m), gf_rpp(by_rows, m));
}

TEST(Bsv, TwoByTwoHasTen) {
  Poset p = build_rectangle(2, 2);
  std::vector<BsvLinearExtension> all;
  for_each_bsv(p, [&](const BsvLinearExtension& s) { all.push_back(s); });
  EXPECT_EQ(all.size(), 10U);
  EXPECT_EQ(gf_bsv(p).at_t_one(), (QPoly{1, 2, 2, 2, 2, 1}));
}

TEST(Bsv, StaircaseTable) {
  Poset p = build_shifted({3, 2, 1});
  std::multiset<unsigned> got, want = {5, 8, 4, 7, 3, 2, 6, 3, 6, 2, 1, 5, 0, 4};
  for_each_bsv(p, [&](const BsvLinearExtension& s) { got.insert(comaj_plus(s)); });
  EXPECT_EQ(got, want);
  BsvLinearExtension s = bsv_from_text(p, "1,2,4|5/3,6/7");
  EXPECT_EQ(bsv_descents(s), (std::vector<unsigned>{3, 5}));
  EXPECT_EQ(comaj_plus(s), 6U);
  BsvLinearExtension last = bsv_from_text(p, "1,2,4/3,5/6|7");
  EXPECT_EQ(bsv_descents(last), (std::vector<unsigned>{3, 7}));
}

TEST(Bsv, TripleExample) {
  Poset p = build_rectangle(3, 3);
  BsvLinearExtension s = bsv_from_text(p, "1,2,5/3,4|6,8/7,9,10");
  LinTriple tr = triple_from_bsv(s);
  EXPECT_EQ(tr.i, 5U);
  EXPECT_EQ(tr.p, p.element_at(Cell{2, 2}));
  EXPECT_EQ(tr.t, linext_from_text(p, "1,2,5/3,4,7/6,8,9"));
  EXPECT_EQ(bsv_from_triple(p, tr), s);
  EXPECT_THROW(bsv_from_triple(p, LinTriple{tr.t, 5, 0}), InvalidTriple);
  EXPECT_THROW(bsv_from_triple(p, LinTriple{tr.t, 0, 0}), InvalidTriple);
}

TEST(Bsv, TripleRoundTripAndCount) {
  for (const Poset& p : small_corpus()) {
    std::size_t count = 0;
    for_each_bsv(p, [&](const BsvLinearExtension& s) {
      ++count;
      EXPECT_TRUE(is_bsv_linear_extension(p, s));
      EXPECT_EQ(bsv_from_triple(p, triple_from_bsv(s)), s);
    });
    // One BSV filling per (T, i, p) with p maximal in the prefix ideal of length i >= 1.
    std::size_t triples = 0;
    for_each_linear_extension(p, [&](const LinearExtension& t) {
      for (unsigned i = 1; i <= t.size(); ++i) triples += popcount(p.maximal_in(t.prefix_ideal(i)));
    });
    EXPECT_EQ(count, triples) << p.origin().name;
  }
}

TEST(Bsv, RowRefinementAtTwoByTwo) {
  QTPoly f = gf_bsv(build_rectangle(2, 2), Refinement::row);
  QTPoly want = qt_num(2) * QTPoly(qnum(2) * qnum(5) * QPoly{1, 0, 1});
  EXPECT_EQ(f * QTPoly(qnum(4)), want);
  EXPECT_THROW(gf_bsv(build_e6(), Refinement::row), UnsupportedRefinement);
}

TEST(Rpp, StanleyExpansion) {
  for (const Poset& p : small_corpus()) {
    const unsigned n = static_cast<unsigned>(p.size());
    for (unsigned m = 0; m <= 3; ++m) {
      QPoly s;
      for_each_linear_extension(p, [&](const LinearExtension& t) {
        s += QPoly::q_power(comaj(t)) * qbinom(m + n - static_cast<unsigned>(descents(t).size()), n);
      });
      EXPECT_EQ(gf_rpp(p, m), s) << p.origin().name << " m=" << m;
    }
  }
}

TEST(Rpp, SeriesFromComaj) {
  for (const Poset& p : small_corpus()) {
    const unsigned n = static_cast<unsigned>(p.size());
    QPoly want = (gf_comaj(p) * series_inverse(one_minus_q_powers(n), 14)).truncated(14);
    EXPECT_EQ(rpp_series(p, 14), want) << p.origin().name;
  }
}
