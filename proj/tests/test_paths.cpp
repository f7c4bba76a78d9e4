#include <gtest/gtest.h>

#include "qtab/errors.hpp"
#include "qtab/linext.hpp"
#include "qtab/paths.hpp"
#include "qtab/qnumbers.hpp"

using namespace qtab;

namespace {

// All words over {U, D, Hr, Hb} of the given length, filtered by the path
// rules written out directly.
std::size_t brute_rbmotz(unsigned len) {
  std::size_t count = 0;
  std::vector<int> w(len, 0);
  while (true) {
    int h = 0;
    bool ok = true, seen_down = false;
    for (unsigned i = 0; i < len && ok; ++i) {
      switch (w[i]) {
        case 0: ++h; break;
        case 1: --h; seen_down = true; break;
        case 2: ok = h > 0; break;
        case 3: ok = seen_down; break;
      }
      ok = ok && h >= 0;
    }
    if (ok && h == 0) ++count;
    unsigned i = 0;
    while (i < len && w[i] == 3) w[i++] = 0;
    if (i == len) break;
    ++w[i];
  }
  return count;
}

TwoRowTableau tab(std::vector<std::vector<unsigned>> top, std::vector<std::vector<unsigned>> bottom) {
  return TwoRowTableau{std::move(top), std::move(bottom)};
}

}  // namespace

TEST(Paths, TextFormat) {
  Path p = parse_path("UHrDUHbD");
  EXPECT_EQ(p.size(), 6U);
  EXPECT_EQ(path_to_string(p), "UHrDUHbD");
  EXPECT_THROW(parse_path("UX"), ParseError);
  EXPECT_THROW(parse_path("UH"), ParseError);
}

TEST(Paths, Predicates) {
  EXPECT_TRUE(is_dyck(parse_path("UUDD")));
  EXPECT_FALSE(is_dyck(parse_path("UDDU")));
  EXPECT_TRUE(is_motzkin(parse_path("UHrD")));
  EXPECT_TRUE(is_rbmotz(parse_path("UHrD")));
  EXPECT_FALSE(is_rbmotz(parse_path("HrUD")));
  EXPECT_FALSE(is_rbmotz(parse_path("UHbD")));
  EXPECT_TRUE(is_rbmotz(parse_path("UDHb")));
  EXPECT_EQ(valleys(parse_path("UDUUDD")), std::vector<unsigned>{2});
  EXPECT_EQ(horizontals(parse_path("UHrDHb")), (std::vector<unsigned>{2, 4}));
}

TEST(Paths, FigureExamples) {
  TwoRowTableau red = tab({{1, 2}, {4}, {5}}, {{3}, {6}, {7}});
  ASSERT_TRUE(is_standard_set_valued(red));
  EXPECT_EQ(path_to_string(motzkin_from_tableau(red)), "UHrDUUDD");
  TwoRowTableau blue = tab({{1}, {4}, {5}}, {{2, 3}, {6}, {7}});
  ASSERT_TRUE(is_standard_set_valued(blue));
  EXPECT_EQ(path_to_string(motzkin_from_tableau(blue)), "UDHbUUDD");
  EXPECT_EQ(tableau_from_motzkin(parse_path("UDHbUUDD")), blue);
  EXPECT_THROW(tableau_from_motzkin(parse_path("HrUD")), ParseError);
}

TEST(Paths, RbMotzCounts) {
  for (unsigned len = 1; len <= 8; ++len) {
    EXPECT_EQ(count_rbmotz(len), Integer(static_cast<unsigned long>(brute_rbmotz(len)))) << len;
    if (len >= 2) EXPECT_EQ(count_rbmotz(len), catalan(len - 1));
  }
  EXPECT_EQ(count_rbmotz(1), 0);
}

TEST(Paths, SetValuedBijection) {
  for (unsigned b = 1; b <= 3; ++b)
    for (unsigned k = 0; k <= 2; ++k) {
      Integer n = 0;
      for_each_set_valued_2row(b, k, [&](const TwoRowTableau& s) {
        ++n;
        ASSERT_TRUE(is_standard_set_valued(s));
        Path p = motzkin_from_tableau(s);
        EXPECT_TRUE(is_rbmotz(p));
        EXPECT_EQ(horizontals(p).size(), k);
        EXPECT_EQ(tableau_from_motzkin(p), s);
      });
      EXPECT_EQ(n, count_rbmotz(2 * b + k, k));
    }
}

TEST(Paths, DyckAndSyt) {
  for (unsigned b = 1; b <= 5; ++b) {
    Poset p = build_rectangle(2, b);
    for_each_linear_extension(p, [&](const LinearExtension& t) {
      Path d = dyck_from_syt(p, t);
      EXPECT_TRUE(is_dyck(d));
      EXPECT_EQ(valleys(d), descents(t));
      EXPECT_EQ(comaj_dyck(d), comaj(t));
      EXPECT_EQ(syt_from_dyck(d), t);
    });
    EXPECT_EQ(gf_comaj_dyck(b), q_catalan(b));
    EXPECT_EQ(gf_comaj(p), q_catalan(b));
  }
  EXPECT_THROW(dyck_from_syt(build_rectangle(3, 2), linear_extensions(build_rectangle(3, 2))[0]), WrongShape);
}

TEST(Paths, BsvTableauxMatchOneHorizontal) {
  for (unsigned b = 1; b <= 4; ++b) {
    Poset p = build_rectangle(2, b);
    for_each_bsv(p, [&](const BsvLinearExtension& s) {
      Path path = motzkin_from_tableau(two_row_from_bsv(p, s));
      EXPECT_EQ(comaj_plus_path(path), comaj_plus(s));
    });
    EXPECT_EQ(gf_rbmotz_one_horizontal(b), dyck_gen_fun_formula(b));
  }
}

TEST(Paths, Narayana) {
  for (unsigned len = 2; len <= 8; ++len) {
    auto d = top_entry_distribution(len);
    Integer total = 0;
    for (unsigned j = 0; j < d.size(); ++j) {
      EXPECT_EQ(d[j], narayana(len - 1, j)) << "len " << len << " j " << j;
      total += d[j];
    }
    EXPECT_EQ(total, catalan(len - 1));
  }
}
