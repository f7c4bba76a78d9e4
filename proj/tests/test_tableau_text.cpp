#include <gtest/gtest.h>

#include "qtab/errors.hpp"
#include "qtab/tableau_text.hpp"

using namespace qtab;

TEST(TableauText, ParseAndFormat) {
  TableauRows rows = parse_tableau("1,2|3,5\n4,6");
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0][1], (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(format_tableau(rows), "1,2|3,5/4,6");
  EXPECT_EQ(format_tableau(parse_tableau(format_tableau(rows))), format_tableau(rows));
  EXPECT_THROW(parse_tableau("1,,2"), ParseError);
  EXPECT_THROW(parse_tableau("1,a"), ParseError);
}

TEST(TableauText, LinearExtensions) {
  Poset p = build_shape({3, 2});
  for (const auto& t : linear_extensions(p)) EXPECT_EQ(linext_from_text(p, format_linext(p, t)), t);
  EXPECT_THROW(linext_from_text(p, "1,2,3/4"), WrongShape);
  EXPECT_THROW(linext_from_text(p, "1,2,4/3,5/6"), WrongShape);
  EXPECT_THROW(linext_from_text(p, "2,1,3/4,5"), ParseError);
  EXPECT_THROW(linext_from_text(p, "1,2,3/4,4"), ParseError);
}

TEST(TableauText, ShiftedRowsStartOnTheDiagonal) {
  Poset p = build_shifted({3, 2, 1});
  EXPECT_EQ(row_elements(p), (std::vector<std::vector<unsigned>>{{0, 1, 2}, {3, 4}, {5}}));
  LinearExtension t = linext_from_text(p, "1,2,3/4,5/6");
  EXPECT_EQ(format_linext(p, t, "\n"), "1,2,3\n4,5\n6");
}

TEST(TableauText, BarelySetValued) {
  Poset p = build_rectangle(2, 2);
  for_each_bsv(p, [&](const BsvLinearExtension& s) { EXPECT_EQ(bsv_from_text(p, format_bsv(p, s)), s); });
  EXPECT_THROW(bsv_from_text(p, "1|2,3/4,5|6"), ParseError);
  EXPECT_THROW(bsv_from_text(p, "1,2/3,4"), ParseError);
  EXPECT_THROW(row_elements(build_e6()), WrongShape);
}
