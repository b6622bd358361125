#include "support.hpp"

#include <somos/coeff_seq.hpp>
#include <somos/series.hpp>

#include <gtest/gtest.h>

#include <thread>

namespace somos {
namespace {

using test::C;
using test::P;
using test::V;

std::vector<Rational> values(const CoeffSeq& s, std::size_t n) {
  std::vector<Rational> out;
  for (const auto& t : s.prefix(n)) out.push_back(*t.constant_value());
  return out;
}

std::vector<Rational> Q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.push_back(parse_rational(s));
  return out;
}

// Entry values below were computed with sympy from the convolution rules.
TEST(CoeffSeq, Somos4EntriesAtPoint) {
  CoeffSeq p = somos4_entries(C(2), C(3), C(5), C(1));
  EXPECT_EQ(p.kind(), SeqKind::Somos4P);
  EXPECT_EQ(values(p, 8), Q({"2", "-1", "2", "1", "37/3", "299/9", "3889/27", "41099/81"}));
}

TEST(CoeffSeq, Somos5EntriesAtPoint) {
  auto [p, q] = somos5_entries(C(2), C(3), C(5), C(1), C(2));
  EXPECT_EQ(values(p, 7), Q({"5/4", "-2", "48/5", "-1789/50", "18363/125", "-3044761/5000", "16212931/6250"}));
  EXPECT_EQ(values(q, 7), Q({"17/9", "-2", "17/3", "-259/45", "21587/675", "-217351/10125", "34252598/151875"}));
}

TEST(CoeffSeq, Somos4EntriesSymbolicHead) {
  CoeffSeq p = somos4_entries(V("x"), V("y"), V("b"), V("r"));
  EXPECT_EQ(p.term(0), V("x"));
  EXPECT_EQ(p.term(1), P("-r"));
}

TEST(CoeffSeq, A1QAlternativeRuleAgrees) {
  CoeffSeq p = a1q_entries(V("x"), V("b"));
  CoeffSeq q = a1q_entries_alt(V("x"), V("b"));
  for (std::size_t m = 0; m < 12; ++m) EXPECT_EQ(p.term(m), q.term(m)) << "m = " << m;
}

TEST(CoeffSeq, CopiesShareCacheAcrossThreads) {
  CoeffSeq p = a1q_entries(V("x"), V("b"));
  std::vector<LaurentPoly> want = a1q_entries(V("x"), V("b")).prefix(14);
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t, copy = p] { ok[t] = copy.prefix(14) == want; });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(ok, std::vector<int>(4, 1));
  EXPECT_GE(p.computed(), 14u);
}

TEST(Series, SolverMatchesEntriesAndResidualVanishes) {
  FunctionalEquationData fe = somos4_initials(V("x"), V("y"), V("b"), V("r"));
  CoeffSeq p = somos4_entries(V("x"), V("y"), V("b"), V("r"));
  for (std::size_t n : {1u, 3u, 6u, 9u}) {
    TruncatedSeries q = series_compose_fe(fe, n);
    ASSERT_EQ(q.precision(), n);
    for (std::size_t m = 0; m < n; ++m) EXPECT_EQ(q[m], p.term(m));
    EXPECT_GE(fe_residual(fe, q).valuation(), n);
  }
}

TEST(Series, ResidualOnEveryConfiguredInput) {
  std::vector<FunctionalEquationData> inputs = {
      somos4_initials(V("x"), V("y"), V("b"), V("r")),
      somos4_initials(C(1), C(1), C(1), C(1)),
      a1q_shift_initials(V("x"), V("b")),
  };
  for (int k : {1, -1})
    for (const LaurentPoly& f0 : {LaurentPoly(), C(1), V("x")})
      inputs.push_back(somos4_family_initials(V("x"), V("y"), V("b"), V("r"), {k, f0}));
  for (const auto& fe : inputs) {
    TruncatedSeries q = series_compose_fe(fe, 8);
    EXPECT_GE(fe_residual(fe, q).valuation(), 8u);
  }
}

TEST(Series, NextCoefficientExtendsSolution) {
  FunctionalEquationData fe = a1q_shift_initials(V("x"), V("b"));
  TruncatedSeries q5 = series_compose_fe(fe, 5), q6 = series_compose_fe(fe, 6);
  EXPECT_EQ(fe_next_coefficient(fe, q5.coeffs()), q6[5]);
}

TEST(Series, InverseAndProduct) {
  TruncatedSeries s({C(2), C(1), C(3)});
  TruncatedSeries one({C(1), C(0), C(0)});
  EXPECT_EQ(s * inverse(s), one);
  EXPECT_THROW(inverse(TruncatedSeries({P("x + 1"), C(1)})), std::exception);
}

TEST(Series, FamilyBaseMemberIsTheoremData) {
  EXPECT_EQ(somos4_family_initials(V("x"), V("y"), V("b"), V("r"), {1, LaurentPoly()}),
            somos4_initials(V("x"), V("y"), V("b"), V("r")));
}

TEST(Series, FamilyMinusOneInitials) {
  // k = -1, f0 symbolic-free check of the corrected b0 formula at f0 = 1.
  FunctionalEquationData fe = somos4_family_initials(V("x"), V("y"), V("b"), V("r"), {-1, C(1)});
  EXPECT_EQ(fe.b, P("(b*x^2 - r*x*y + r^2*x^3 - y^2)/(r*y)"));
  EXPECT_EQ(fe.e, C(-1));
  EXPECT_EQ(fe.f, C(1));
}

}  // namespace
}  // namespace somos
