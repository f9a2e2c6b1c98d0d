#include <gtest/gtest.h>

#include "superprim/error.hpp"
#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"
#include "superprim/weight_literal.hpp"

namespace superprim {
namespace {

TEST(Weight, ReducesToCommonDenominator) {
  const Weight w({Rational(1, 2), Rational(3)}, {Rational(-1, 4)});
  EXPECT_EQ(w.denominator(), 4);
  EXPECT_EQ(w[0], Rational(1, 2));
  EXPECT_EQ(w.delta(0), Rational(-1, 4));
  const Weight doubled = Rational(4) * w;
  EXPECT_TRUE(doubled.is_integer_vector());
  EXPECT_EQ(doubled.denominator(), 1);
}

TEST(Weight, EqualValuesCompareEqual) {
  const Weight a({Rational(1, 2)}, {Rational(1, 2)});
  const Weight b = Weight({Rational(1)}, {Rational(1)}) - Weight({Rational(1, 2)}, {Rational(1, 2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
}

TEST(Weight, ShapeMismatchThrows) {
  const Weight a(2, 1);
  const Weight b(1, 2);
  try {
    (void)(a + b);
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Weight, SignatureForm) {
  const Weight e1 = Weight::unit(1, 1, 0);
  const Weight d1 = Weight::unit(1, 1, 1);
  EXPECT_EQ(inner(e1, e1), 1);
  EXPECT_EQ(inner(d1, d1), -1);
  EXPECT_EQ(inner(e1, d1), 0);
  EXPECT_EQ(euclidean_dot(d1, d1), 1);
}

TEST(Weight, OverflowIsDetected) {
  const Weight big({Rational(std::int64_t{1} << 62)}, {});
  EXPECT_THROW((void)(big + big), std::overflow_error);
}

TEST(WeightLiteral, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_weight("3,1|-2", 2, 1), Weight({3, 1}, {-2}));
  EXPECT_EQ(parse_weight("7/2|-1/2", 1, 1), Weight({Rational(7, 2)}, {Rational(-1, 2)}));
  EXPECT_EQ(parse_weight("7/2|\xE2\x88\x92" "1/2", 1, 1), Weight({Rational(7, 2)}, {Rational(-1, 2)}));
  EXPECT_EQ(parse_weight("4/2|+0", 1, 1), Weight({2}, {0}));
}

TEST(WeightLiteral, OptionalBarWhenNoDelta) {
  EXPECT_EQ(parse_weight("-1,2", 2, 0), Weight({-1, 2}, {}));
  EXPECT_EQ(parse_weight("-1,2|", 2, 0), Weight({-1, 2}, {}));
}

TEST(WeightLiteral, EmptyEpsBlock) {
  EXPECT_EQ(parse_weight("|3", 0, 1), Weight({}, {3}));
}

TEST(WeightLiteral, MissingDeltaBlockIsMalformed) {
  const RootSystem rs = build_root_system(Family::gl, 2, 1);
  try {
    (void)parse_weight("1,2", rs);
    FAIL() << "expected MalformedWeightLiteral";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedWeightLiteral);
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 3U);
  }
}

TEST(WeightLiteral, ReportsOffsets) {
  auto offset = [](std::string_view text, std::size_t e, std::size_t d) -> std::size_t {
    try {
      (void)parse_weight(text, e, d);
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::MalformedWeightLiteral);
      return err.position().value_or(999);
    }
    ADD_FAILURE() << "no error for " << text;
    return 999;
  };
  EXPECT_EQ(offset("1,x|2", 2, 1), 2U);
  EXPECT_EQ(offset("1/0|2", 1, 1), 2U);
  EXPECT_EQ(offset("1|2|3", 1, 1), 3U);
  EXPECT_EQ(offset("1,|2", 2, 1), 2U);
  EXPECT_EQ(offset("1,2,3|4", 2, 1), 0U);
  EXPECT_EQ(offset("99999999999999999999|1", 1, 1), 0U);
}

TEST(WeightLiteral, FormatRoundTrips) {
  const Weight w({Rational(7, 2), Rational(-3)}, {Rational(0), Rational(-5, 6)});
  EXPECT_EQ(format_weight(w), "7/2,-3|0,-5/6");
  EXPECT_EQ(parse_weight(format_weight(w), 2, 2), w);
  EXPECT_EQ(format_weight(Weight({1, 0}, {})), "1,0");
}

}  // namespace
}  // namespace superprim
