#include "support.hpp"

#include <somos/poly_verify.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::P;
using test::V;
using Outcome = CoprimalityVerdict::Outcome;

TEST(PolyVerify, CaseTables) {
  auto four = somos4_poly_cases();
  auto ten = somos5_poly_cases();
  ASSERT_EQ(four.size(), 4u);
  ASSERT_EQ(ten.size(), 10u);
  EXPECT_EQ(four[1].init, (std::vector<LaurentPoly>{V("x"), C(1), V("w"), V("y")}));
  EXPECT_EQ(four[0].alpha, P("x*y*z*w"));
  EXPECT_EQ(ten[9].init, (std::vector<LaurentPoly>{V("x"), V("w"), V("y"), C(1), C(1)}));
}

TEST(PolyVerify, AllCasesPolynomial) {
  for (const auto& c : somos4_poly_cases()) EXPECT_TRUE(verify_polynomial_case(c, 8).passed()) << c.name;
  for (const auto& c : somos5_poly_cases()) EXPECT_TRUE(verify_polynomial_case(c, 8).passed()) << c.name;
}

TEST(PolyVerify, NonPolynomialCaseFails) {
  PolyCase c{"bad", PolySystem::Somos4, {V("x"), C(1), C(1), V("y")}, C(1), C(1), {"x", "y"}, 0};
  VerdictReport r = verify_polynomial_case(c, 6);
  EXPECT_FALSE(r.passed());
}

TEST(PolyVerify, XyzCaseTerms) {
  PolyCase c = somos4_xyz_case();
  auto t = poly_case_terms(c, 6);
  EXPECT_EQ(t[0], P("x^2*z + x*z"));
  EXPECT_EQ(t[1], V("x"));
  EXPECT_EQ(t[5], P("y^2*z + y*z"));
  EXPECT_EQ(t[6], P("x*y^3*z^2 + x*y^3*z + x*y^2*z^2"));
}

TEST(PolyVerify, CorollaryAndStrongLaurent) {
  EXPECT_TRUE(corollary_determinant_check(4).passed());
  EXPECT_TRUE(strong_laurent_consequence_check(PolySystem::Somos4, 8).passed());
  EXPECT_TRUE(strong_laurent_consequence_check(PolySystem::Somos5, 8).passed());
}

TEST(GcdProbe, Examples) {
  EXPECT_EQ(gcd_probe({V("x"), V("y")}, 8, 1).outcome, Outcome::ProbablyCoprime);
  CoprimalityVerdict v = gcd_probe({P("x*(x+1)"), P("x*(x+2)")}, 8, 1);
  EXPECT_EQ(v.outcome, Outcome::NotCoprime);
  EXPECT_NE(v.witness.find('x'), std::string::npos);
  EXPECT_EQ(gcd_probe({P("(x+1)*y"), P("(x+1)*z")}, 8, 1).outcome, Outcome::NotCoprime);
  EXPECT_EQ(gcd_probe({C(1), V("x"), V("w"), V("y")}, 8, 1).outcome, Outcome::ProbablyCoprime);
  EXPECT_EQ(gcd_probe({P("x + y"), P("x - y")}, 8, 1).outcome, Outcome::ProbablyCoprime);
}

TEST(GcdProbe, HiddenCommonFactorIsNotReportedCoprime) {
  // x + y + 5 is not of the probed linear form; the gcd stage must still see it.
  CoprimalityVerdict v = gcd_probe({P("(x + y + 5)*(x - 2*y)"), P("(x + y + 5)*(y^2 + 1)")}, 8, 3);
  EXPECT_NE(v.outcome, Outcome::ProbablyCoprime);
}

TEST(GcdProbe, DeterministicForSeed) {
  std::vector<LaurentPoly> vals = {P("x^2 + y"), P("x*y + 3"), P("y^3 - x")};
  CoprimalityVerdict a = gcd_probe(vals, 6, 42), b = gcd_probe(vals, 6, 42);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.trials, b.trials);
}

}  // namespace
}  // namespace somos
