#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qtab/errors.hpp"
#include "qtab/poset_io.hpp"
#include "qtab/qnumbers.hpp"

using namespace qtab;

TEST(Poset, TransitiveReduction) {
  Poset p(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.covers().size(), 2U);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.covered_by(0, 2));
  EXPECT_THROW(Poset(2, {{1, 0}}), InvalidPoset);
  EXPECT_THROW(Poset(2, {{0, 5}}), InvalidPoset);
}

TEST(Poset, IdealsMatchSubsetFilter) {
  std::vector<Poset> corpus = {build_shape({3, 2, 1}), build_shape({4, 2}), build_shifted({4, 2, 1}),
                               build_propeller(3), build_e6(), build_chain(5)};
  for (const Poset& p : corpus) EXPECT_EQ(p.order_ideals(), oracle::ideals_by_subsets(p)) << p.origin().name;
}

TEST(Poset, RectangleIdealsAreBinomial) {
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = 1; b <= 4; ++b)
      EXPECT_EQ(Integer(static_cast<unsigned long>(build_rectangle(a, b).order_ideals().size())), binomial(a + b, a));
}

TEST(Poset, MaximalAndMinimal) {
  Poset p = build_rectangle(2, 2);  // 0=(1,1) 1=(1,2) 2=(2,1) 3=(2,2)
  EXPECT_EQ(p.maximal_in(0b0111), Mask(0b0110));
  EXPECT_EQ(p.minimal_outside(0b0111), Mask(0b1000));
  EXPECT_EQ(p.minimal_outside(0), Mask(0b0001));
  EXPECT_FALSE(p.is_ideal(0b0010));
  EXPECT_EQ(p.element_at(Cell{2, 1}), 2U);
  EXPECT_EQ(p.element_at(Cell{3, 1}), 4U);
}

TEST(Poset, Duality) {
  for (const Poset& p : {build_shape({3, 1}), build_shifted({3, 1}), build_e6()}) {
    EXPECT_TRUE(isomorphic(p.dual().dual(), p));
    EXPECT_EQ(p.dual().order_ideals().size(), p.order_ideals().size());
  }
  EXPECT_TRUE(is_self_dual(build_rectangle(2, 3)));
  EXPECT_TRUE(is_self_dual(build_shifted({3, 2, 1})));
  EXPECT_FALSE(is_self_dual(build_shape({2, 1})));
  EXPECT_FALSE(isomorphic(build_shape({2, 1}), build_shape({1, 1, 1})));
  EXPECT_TRUE(isomorphic(build_shape({3}), build_chain(3)));
}

TEST(Poset, Grading) {
  Poset p = build_rectangle(2, 3);
  ASSERT_TRUE(p.is_graded());
  EXPECT_EQ(p.rank_data().rank_of_poset, 3U);
  Poset ragged(4, {{0, 1}, {1, 2}, {0, 3}});
  EXPECT_FALSE(ragged.is_graded());
  EXPECT_THROW(ragged.rank_data(), NotGraded);
  EXPECT_FALSE(build_shape({2, 1, 1}).is_graded());
}

TEST(Poset, ExceptionalMinuscule) {
  Poset e6 = build_e6(), e7 = build_e7();
  EXPECT_EQ(e6.size(), 16U);
  EXPECT_EQ(e7.size(), 27U);
  EXPECT_EQ(e6.order_ideals().size(), 27U);
  EXPECT_EQ(e7.order_ideals().size(), 56U);
  EXPECT_TRUE(is_self_dual(e6));
  EXPECT_TRUE(is_self_dual(e7));
  EXPECT_EQ(e6.rank_data().rank_of_poset, 10U);
  EXPECT_EQ(e7.rank_data().rank_of_poset, 16U);
  EXPECT_THROW(build_minuscule("E8"), UnknownFamily);
}

TEST(Poset, Propeller) {
  // Two elements between a chain below and a chain above; 2k elements.
  Poset p = build_propeller(2);
  EXPECT_EQ(p.size(), 4U);
  EXPECT_EQ(build_propeller(3).size(), 6U);
  EXPECT_TRUE(p.is_graded());
  EXPECT_TRUE(is_self_dual(build_propeller(3)));
  EXPECT_TRUE(isomorphic(build_minuscule("staircase:3"), build_shifted({3, 2, 1})));
}

TEST(Partitions, Counts) {
  const unsigned p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  const unsigned q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
  for (unsigned n = 1; n < 10; ++n) {
    EXPECT_EQ(partitions_of(n).size(), p[n]);
    EXPECT_EQ(strict_partitions_of(n).size(), q[n]);
    for (const auto& l : partitions_of(n)) EXPECT_TRUE(is_partition(l));
    for (const auto& l : strict_partitions_of(n)) EXPECT_TRUE(is_strict_partition(l));
  }
  EXPECT_THROW(build_shape({1, 2}), InvalidPartition);
  EXPECT_THROW(build_shifted({2, 2}), InvalidPartition);
}

TEST(Hooks, KnownValues) {
  EXPECT_EQ(hook_lengths({2, 2}), (std::vector<unsigned>{3, 2, 2, 1}));
  EXPECT_EQ(hook_lengths({3, 1}), (std::vector<unsigned>{4, 2, 1, 1}));
  auto h = shifted_hook_lengths({3, 2, 1});
  std::sort(h.begin(), h.end());
  EXPECT_EQ(h, (std::vector<unsigned>{1, 2, 3, 3, 4, 5}));
  for (const auto& lambda : strict_partitions_of(7)) {
    Integer prod = 1;
    for (unsigned x : shifted_hook_lengths(lambda)) prod *= x;
    auto brute = oracle::linear_extensions_by_permutations(build_shifted(lambda)).size();
    EXPECT_EQ(factorial(7) / prod, Integer(static_cast<unsigned long>(brute))) << partition_to_string(lambda);
  }
}

TEST(PosetIo, Specs) {
  EXPECT_EQ(parse_poset_spec("rect:2x3").size(), 6U);
  EXPECT_EQ(parse_poset_spec("shape:3,1").size(), 4U);
  EXPECT_EQ(parse_poset_spec("shifted:3,2,1").size(), 6U);
  EXPECT_EQ(parse_poset_spec("chain:4").covers().size(), 3U);
  EXPECT_EQ(parse_poset_spec("minuscule:E7").size(), 27U);
  EXPECT_EQ(parse_poset_spec("minuscule:propeller:2").size(), 4U);
  EXPECT_THROW(parse_poset_spec("rect:2y3"), Error);
  EXPECT_THROW(parse_poset_spec("shape:1,2"), InvalidPartition);
  EXPECT_THROW(parse_poset_spec("minuscule:F4"), UnknownFamily);
}

TEST(PosetIo, JsonRoundTrip) {
  for (const Poset& p : {build_shape({3, 2}), build_shifted({3, 1}), build_e6()}) {
    Poset back = poset_from_json(poset_to_json(p));
    EXPECT_EQ(back.covers(), p.covers());
    EXPECT_EQ(back.origin().name, p.origin().name);
    EXPECT_EQ(back.origin().cells, p.origin().cells);
  }
}

TEST(PosetIo, RelabelingAndValidation) {
  // A 2-chain plus an isolated point, listed with labels 3, 1, 2.
  Poset p = poset_from_json(R"({"n": 3, "covers": [[1, 0]], "labeling": [3, 1, 2]})");
  EXPECT_EQ(p.size(), 3U);
  EXPECT_EQ(p.covers().size(), 1U);
  EXPECT_THROW(poset_from_json(R"({"n": 2, "covers": [[0, 1]], "labeling": [2, 1]})"), InvalidPoset);
  EXPECT_THROW(poset_from_json(R"({"n": 2, "covers": [[0, 1]], "labeling": [1, 1]})"), InvalidPoset);
  EXPECT_THROW(poset_from_json("not json"), Error);
}
