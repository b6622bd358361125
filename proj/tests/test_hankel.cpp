#include "support.hpp"

#include <somos/errors.hpp>
#include <somos/hankel.hpp>
#include <somos/recurrences.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::V;

TEST(Hankel, MatrixShape) {
  std::vector<LaurentPoly> t;
  for (long i = 0; i < 8; ++i) t.push_back(C(i));
  PolyMatrix m = hankel_matrix(t, 3, 2);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m(0, 0), C(2));
  EXPECT_EQ(m(1, 2), C(5));
  EXPECT_EQ(m(2, 2), C(6));
}

TEST(Hankel, EmptyDeterminantIsOne) {
  EXPECT_EQ(det_bareiss(PolyMatrix()), C(1));
  EXPECT_EQ(det_laplace(PolyMatrix()), C(1));
}

TEST(Hankel, BareissAgreesWithLaplaceRandom) {
  std::mt19937_64 rng(314);
  for (int i = 0; i < 50; ++i) {
    PolyMatrix m = test::random_matrix(rng, static_cast<std::size_t>(i % 5), 3);
    EXPECT_EQ(det_bareiss(m), det_laplace(m)) << "case " << i;
  }
}

TEST(Hankel, RowSwapFlipsSignRandom) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    PolyMatrix m = test::random_matrix(rng, 3);
    PolyMatrix s = m;
    s.swap_rows(0, 2);
    EXPECT_EQ(det_bareiss(s), -det_bareiss(m));
  }
}

TEST(Hankel, ZeroLeadingPivotNeedsRowExchange) {
  PolyMatrix m(2, C(0));
  m(0, 1) = V("x");
  m(1, 0) = V("y");
  m(1, 1) = C(1);
  EXPECT_EQ(det_bareiss(m), -(V("x") * V("y")));
}

TEST(Hankel, LaplaceSizeLimit) {
  EXPECT_THROW(det_laplace(PolyMatrix(7, C(1))), DimensionTooLarge);
}

TEST(Hankel, GaussianDeterminant) {
  const GaussianRational i = GaussianRational::imaginary_unit();
  SquareMatrix<GaussianPoly> m(2, GaussianPoly());
  m(0, 0) = GaussianPoly(i);
  m(0, 1) = GaussianPoly(GaussianRational(1));
  m(1, 0) = GaussianPoly(GaussianRational(1));
  m(1, 1) = GaussianPoly(i);
  EXPECT_EQ(det_bareiss(m), GaussianPoly(GaussianRational(-2)));
  EXPECT_EQ(det_laplace(m), det_bareiss(m));
}

// Hankel values at a point, frozen from sympy.
TEST(Hankel, Somos4AtPoint) {
  CoeffSeq p = somos4_entries(C(2), C(3), C(5), C(1));
  const long want[] = {1, 2, 3, 23, 91};
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(det_bareiss(hankel_matrix(p, n)), C(want[n]));
}

TEST(Hankel, Somos5AtPoint) {
  auto [p, q] = somos5_entries(C(2), C(3), C(5), C(1), C(2));
  const std::vector<Rational> ps = {2, 5, 64, 1027};
  const std::vector<Rational> qs = {3, 17, 181, Rational(40627, 5)};
  for (std::size_t n = 0; n < 4; ++n) {
    EXPECT_EQ(C(2).pow(static_cast<unsigned>(n + 1)) * det_bareiss(hankel_matrix(p, n)), LaurentPoly(ps[n]));
    EXPECT_EQ(C(3).pow(static_cast<unsigned>(n + 1)) * det_bareiss(hankel_matrix(q, n)), LaurentPoly(qs[n]));
  }
}

TEST(Hankel, SymbolicSomos4SmallN) {
  CoeffSeq p = somos4_entries(V("x"), V("y"), V("b"), V("r"));
  auto s = somos4_seq({V("r") * V("r"), V("b"), {C(1), C(1), V("x"), V("y")}}, 6);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(det_bareiss(hankel_matrix(p, n)), s[n + 1]) << "n = " << n;
}

TEST(Hankel, ShiftedRunOnA1Q) {
  CoeffSeq p = a1q_entries(V("x"), V("b"));
  auto h1 = shifted_hankel_run(p, 5, 1);
  ASSERT_EQ(h1.size(), 6u);
  for (const auto& h : h1) EXPECT_EQ(h, C(1));
}

}  // namespace
}  // namespace somos
