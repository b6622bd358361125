#include "support.hpp"

#include <somos/coeff_seq.hpp>
#include <somos/errors.hpp>
#include <somos/hankel.hpp>
#include <somos/recurrences.hpp>
#include <somos/sx_engine.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::P;
using test::V;

const SXTrajectory& base_trajectory() {
  static const SXTrajectory t = SXTrajectory::run(SXState::from(somos4_initials(V("x"), V("y"), V("b"), V("r"))), 6);
  return t;
}

TEST(SXEngine, FirstStep) {
  const auto& t = base_trajectory();
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[1].a, RatFunc::fraction(V("y"), P("x^2")));
  EXPECT_EQ(t[1].f, RatFunc::fraction(P("b*x^2 - y^2 + r^2*x^3"), P("r*x*y")));
}

TEST(SXEngine, StructureAndProduct) {
  const auto& t = base_trajectory();
  EXPECT_TRUE(sx_structure_check(t).passed());
  auto s = somos4_seq({P("r^2"), V("b"), {C(1), C(1), V("x"), V("y")}}, 7);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(sx_hankel_product(t, n), RatFunc(s[n + 1])) << "n = " << n;
}

TEST(SXEngine, ClosedIdentityAndRecursion) {
  const auto& t = base_trajectory();
  EXPECT_TRUE(sx_closed_identity_check(t, 4).passed());
  VerdictReport r = sx_a_recursion_check(t, {P("r^2"), V("b"), {C(1), C(1), V("x"), V("y")}});
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.items.size(), 10u);
}

TEST(SXEngine, ClosedIdentitySkipsShortTrajectory) {
  SXTrajectory t = SXTrajectory::run(SXState::from(a1q_shift_initials(V("x"), V("b"))), 2);
  VerdictReport r = sx_closed_identity_check(t, 4);
  EXPECT_TRUE(std::any_of(r.items.begin(), r.items.end(), [](const VerdictItem& i) { return i.status == Status::Skip; }));
}

TEST(SXEngine, ProductMatchesSeriesHankelForA1QData) {
  FunctionalEquationData fe = a1q_shift_initials(V("x"), V("b"));
  SXTrajectory t = SXTrajectory::run(SXState::from(fe), 4);
  CoeffSeq q = CoeffSeq::from_series(fe);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(sx_hankel_product(t, n), RatFunc(det_bareiss(hankel_matrix(q, n))));
}

TEST(SXEngine, ShiftTransform) {
  EXPECT_TRUE(sx_shift_transform_check(V("x"), V("b"), 4).passed());
  EXPECT_TRUE(sx_shift_transform_check(C(1), C(1), 5).passed());
}

TEST(SXEngine, ZeroPivot) {
  SXState s = SXState::from(somos4_initials(V("x"), V("y"), V("b"), V("r")));
  s.a = RatFunc(LaurentPoly());
  EXPECT_THROW(sx_step(s), ZeroPivot);
}

}  // namespace
}  // namespace somos
