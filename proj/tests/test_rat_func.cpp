#include "support.hpp"

#include <somos/rat_func.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::P;

TEST(RatFunc, ReducesToLaurent) {
  RatFunc q = RatFunc::fraction(P("x^2 - 1"), P("x - 1"));
  ASSERT_TRUE(q.is_laurent());
  EXPECT_EQ(*q.as_laurent(), P("x + 1"));
  EXPECT_TRUE(RatFunc::fraction(P("x^3*y"), P("x*y^2")).is_laurent());
}

TEST(RatFunc, FactorNormalization) {
  RatFunc q = RatFunc::fraction(C(1), P("2*x^2 + 2*x*y"));
  ASSERT_EQ(q.denominator_factors().size(), 1u);
  EXPECT_EQ(q.denominator_factors()[0].poly, P("x + y"));
  EXPECT_EQ(q * RatFunc(P("x + y")), RatFunc(P("x^-1/2")));
}

TEST(RatFunc, FieldOperations) {
  RatFunc a = RatFunc::fraction(C(1), P("x + 1"));
  RatFunc b = RatFunc::fraction(C(1), P("x - 1"));
  EXPECT_EQ(a + b, RatFunc::fraction(P("2*x"), P("x^2 - 1")));
  EXPECT_EQ(a - b, RatFunc::fraction(C(-2), P("x^2 - 1")));
  EXPECT_EQ((a * b).inverse(), RatFunc(P("x^2 - 1")));
  EXPECT_EQ(a / b, RatFunc::fraction(P("x - 1"), P("x + 1")));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), RatFunc::fraction(C(1), P("(x+1)^3")));
}

TEST(RatFunc, RandomFieldAxioms) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    RatFunc a = RatFunc::fraction(test::random_poly(rng, 3), test::random_nonzero_poly(rng, 2));
    RatFunc b = RatFunc::fraction(test::random_poly(rng, 3), test::random_nonzero_poly(rng, 2));
    RatFunc c = RatFunc::fraction(test::random_nonzero_poly(rng, 3), test::random_nonzero_poly(rng, 2));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(RatFunc, RefinedSplitsCompositeFactor) {
  RatFunc q = RatFunc::fraction(C(1), P("(x + 1)*(y + 1)"));
  ASSERT_EQ(q.denominator_factors().size(), 1u);
  RatFunc split = q.refined({P("x + 1")});
  EXPECT_EQ(split, q);
  EXPECT_EQ(split.denominator_factors().size(), 2u);
}

TEST(RatFunc, TextForm) {
  EXPECT_EQ(RatFunc(P("x")).to_string(), "1*x^1");
  EXPECT_EQ(RatFunc::fraction(C(1), P("x + 1")).to_string(), "(1) / (1*x^1 + 1)");
}

}  // namespace
}  // namespace somos
