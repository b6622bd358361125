#include "support.hpp"

#include <somos/errors.hpp>
#include <somos/json_io.hpp>
#include <somos/laurent_poly.hpp>
#include <somos/text_io.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::P;
using test::V;

TEST(Rational, TextRoundTrip) {
  for (const char* s : {"0", "7", "-3/4", "12345678901234567890123/7"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, PowAndSqrt) {
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_THROW(pow(Rational(0), -1), std::domain_error);
  Rational root;
  ASSERT_TRUE(rational_sqrt(Rational(49, 4), root));
  EXPECT_EQ(root, Rational(7, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), root));
  EXPECT_FALSE(rational_sqrt(Rational(-4), root));
}

TEST(Gaussian, Arithmetic) {
  const GaussianRational i = GaussianRational::imaginary_unit();
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(pow(i, 4), GaussianRational(1));
  EXPECT_EQ(pow(-i, 3), i);
  EXPECT_EQ(GaussianRational(1) / i, -i);
  EXPECT_EQ(to_string(GaussianRational(Rational(1, 2), Rational(-3))), "1/2-3i");
  EXPECT_EQ(parse_gaussian("1/2-3i"), GaussianRational(Rational(1, 2), Rational(-3)));
}

TEST(VarTable, StandardOrder) {
  const auto& t = VarTable::standard();
  EXPECT_EQ(t.names(), (std::vector<std::string>{"r", "x", "y", "z", "w", "b", "a"}));
  EXPECT_TRUE(t.is_prefix_of(VarTable::with_root()));
  EXPECT_EQ(VarTable::with_root().names().back(), "s");
  EXPECT_THROW(t.require("q"), UnknownVariable);
}

TEST(LaurentPoly, CanonicalText) {
  LaurentPoly p = V("x") * P("y^-1") - C(1);
  EXPECT_EQ(p.to_string(), "1*x^1*y^-1 + -1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  // graded-lex: total degree first, then r before x
  EXPECT_EQ(P("x^2 + r*x + y^3").to_string(), "1*y^3 + 1*r^1*x^1 + 1*x^2");
}

TEST(LaurentPoly, FrozenProduct) {
  // Expansion computed independently with sympy.
  LaurentPoly got = (P("x + y^-1 + 3/2")).pow(3) * P("x^2 - 2*b");
  LaurentPoly want = P(
      "-2*b*x^3 - 9*b*x^2 - 6*b*x^2/y - 27*b*x/2 - 18*b*x/y - 6*b*x/y^2 - 27*b/4 - 27*b/(2*y) - 9*b/y^2 - 2*b/y^3"
      " + x^5 + 9*x^4/2 + 3*x^4/y + 27*x^3/4 + 9*x^3/y + 3*x^3/y^2 + 27*x^2/8 + 27*x^2/(4*y) + 9*x^2/(2*y^2) + x^2/y^3");
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.size(), 20u);
}

TEST(LaurentPoly, ExactDivision) {
  EXPECT_EQ(exact_div(P("x^2 - y^2"), P("x + y")), P("x - y"));
  EXPECT_EQ(exact_div(P("x^-1*y + y^2"), P("x^-2 + x^-1*y")), P("x*y"));
  EXPECT_THROW(exact_div(P("x^2 + 1"), P("x + 1")), NotDivisible);
  EXPECT_FALSE(try_exact_div(P("x^2 + 1"), P("x + 1")).has_value());
  EXPECT_THROW(exact_div(P("x"), LaurentPoly()), std::domain_error);
}

TEST(LaurentPoly, ExponentOverflow) { EXPECT_THROW(P("x^30000") * P("x^30000"), ExponentOverflow); }

TEST(LaurentPoly, TextAndJsonRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = test::random_poly(rng, 6);
    EXPECT_EQ(parse_laurent(p.to_string()), p);
    EXPECT_EQ(laurent_from_json(to_json(p)), p);
  }
  GaussianPoly g = parse_gaussian_poly("(1/2 + i)*x^2*y^-1 - 3*i");
  EXPECT_EQ(gaussian_from_json(to_json(g)), g);
  EXPECT_EQ(parse_gaussian_poly(g.to_string()), g);
}

TEST(LaurentPoly, ParseErrors) {
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("q + 1"), UnknownVariable);
  EXPECT_THROW(P("(x+1)/(x-1)"), NotDivisible);
  EXPECT_THROW(laurent_from_json("{\"terms\": 3}"), ParseError);
}

TEST(LaurentPoly, RingAxiomsRandom) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng), c = test::random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPoly, DivisionRoundTripRandom) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = test::random_poly(rng, 5);
    LaurentPoly b = test::random_nonzero_poly(rng, 4);
    EXPECT_EQ(exact_div(a * b, b), a) << "a = " << a.to_string() << ", b = " << b.to_string();
  }
}

TEST(LaurentPoly, EvaluationHomomorphismRandom) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(1, 7);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng);
    Rational xv(pick(rng), 2), bv(pick(rng), 3);
    xv.canonicalize();
    bv.canonicalize();
    Assignment<Rational> at{{"x", xv}, {"y", Rational(-pick(rng))}, {"b", bv}};
    EXPECT_EQ(evaluate(a * b, at), evaluate(a, at) * evaluate(b, at));
    EXPECT_EQ(evaluate(a + b, at), evaluate(a, at) + evaluate(b, at));
    Assignment<Rational> part{{"x", at["x"]}};
    Assignment<Rational> rest{{"y", at["y"]}, {"b", at["b"]}};
    EXPECT_EQ(evaluate(specialize(a, part), rest), evaluate(a, at));
  }
}

TEST(LaurentPoly, EvaluationErrors) {
  EXPECT_THROW(evaluate(P("x^-1"), Assignment<Rational>{{"x", Rational(0)}}), ZeroAtNegativeExponent);
  EXPECT_THROW(evaluate(P("x + y"), Assignment<Rational>{{"x", Rational(1)}}), UnassignedVariable);
  EXPECT_EQ(evaluate(P("x^2 + 1"), Assignment<GaussianRational>{{"x", GaussianRational::imaginary_unit()}}),
            GaussianRational(0));
}

TEST(LaurentPoly, Classify) {
  ClassReport c = classify(P("r^2*x^-1 + r^4*b*y"), {"r", "b", "x"});
  EXPECT_TRUE(c.at("r").all_even);
  EXPECT_TRUE(c.at("b").polynomial());
  EXPECT_FALSE(c.at("x").polynomial());
  EXPECT_EQ(c.at("x").min_exponent, -1);
  EXPECT_FALSE(c.polynomial());
  EXPECT_FALSE(classify(P("r*x"), {"r"}).at("r").all_even);
}

TEST(LaurentPoly, RebaseToRootTable) {
  LaurentPoly p = P("x*y - 2");
  LaurentPoly q = p.rebased(VarTable::with_root());
  EXPECT_EQ(q.vars(), VarTable::with_root());
  EXPECT_EQ(q.to_string(), p.to_string());
  EXPECT_THROW(p + q, VarTableMismatch);
}

}  // namespace
}  // namespace somos
