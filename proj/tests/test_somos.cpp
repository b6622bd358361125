#include "support.hpp"

#include <somos/a1q_identities.hpp>
#include <somos/bilinear_checks.hpp>
#include <somos/errors.hpp>
#include <somos/invariants.hpp>
#include <somos/recurrences.hpp>

#include <gtest/gtest.h>

namespace somos {
namespace {

using test::C;
using test::P;
using test::V;

std::vector<LaurentPoly> ints(std::initializer_list<long> xs) {
  std::vector<LaurentPoly> out;
  for (long v : xs) out.push_back(C(v));
  return out;
}

TEST(Recurrences, AllOnesOracles) {
  EXPECT_EQ(somos4_seq({C(1), C(1), {C(1), C(1), C(1), C(1)}}, 11), ints({1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209}));
  EXPECT_EQ(somos5_seq({C(1), C(1), {C(1), C(1), C(1), C(1), C(1)}}, 11),
            ints({1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274}));
}

TEST(Recurrences, RationalTerms) {
  auto s = somos4_seq({C(3), C(-1), {C(2), C(3), C(5), C(7)}}, 7);
  EXPECT_EQ(s[4], C(19));
  EXPECT_EQ(s[5], P("236/3"));
  EXPECT_EQ(s[6], P("1291/5"));
  EXPECT_EQ(s[7], P("54829/45"));
}

TEST(Recurrences, Backward) {
  EXPECT_EQ(somos4_backward({C(2), C(1), {C(1), C(2), C(3), C(7)}}, 2), (std::vector<LaurentPoly>{P("47/21"), P("10/7")}));
  SomosParams p{V("x") * V("y") * V("z"), V("x") * V("y") * V("z"), {V("x"), C(1), C(1), V("y")}};
  EXPECT_EQ(somos4_backward(p, 1)[0], P("x^2*z + x*z"));
}

TEST(Recurrences, SymbolicTerms) {
  auto s4 = somos4_seq({P("r^2"), V("b"), {C(1), C(1), V("x"), V("y")}}, 5);
  EXPECT_EQ(s4[4], P("b*x^2 + r^2*y"));
  EXPECT_EQ(s4[5], P("b*r^2*x^3 + b*y^2 + r^4*x*y"));
  auto s5 = somos5_seq({V("a"), V("b"), {C(1), C(1), V("x"), V("y"), V("z")}}, 6);
  EXPECT_EQ(s5[5], P("a*z + b*x*y"));
  EXPECT_EQ(s5[6], P("a^2*x*z + a*b*x^2*y + b*y*z"));
  auto q = a1q_seq({V("b"), {C(1), V("x")}, std::nullopt}, 4);
  EXPECT_EQ(q[2], P("x^2 + b"));
  EXPECT_EQ(q[4], P("b^3/x^2 + 3*b^2 + 2*b^2/x^2 + 3*b*x^2 + 2*b + b/x^2 + x^4"));
}

TEST(Recurrences, Errors) {
  try {
    somos4_seq({C(1), C(1), {C(1), C(1), C(0), C(1)}}, 6);
    FAIL() << "expected SequenceError";
  } catch (const SequenceError& e) {
    EXPECT_EQ(e.kind(), SequenceError::Kind::ZeroTerm);
    EXPECT_EQ(e.index(), 2u);
  }
  try {
    somos4_seq({C(1), C(-1), {C(1), C(1), C(1), C(1)}}, 8);
    FAIL() << "expected SequenceError";
  } catch (const SequenceError& e) {
    EXPECT_EQ(e.kind(), SequenceError::Kind::ZeroTerm);
  }
}

TEST(Recurrences, GaugeCovarianceRandom) {
  // A B^n C^{n^2} S_n satisfies Somos-4 with (alpha C^6, beta C^8).
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(1, 4), sign(0, 1);
  for (int t = 0; t < 10; ++t) {
    Rational A(d(rng), d(rng)), B(d(rng) * (sign(rng) ? 1 : -1)), G(d(rng), d(rng));
    A.canonicalize();
    G.canonicalize();
    LaurentPoly alpha = C(d(rng)), beta = C(d(rng));
    auto s = somos4_seq({alpha, beta, {C(1), C(d(rng)), C(d(rng)), C(d(rng))}}, 9);
    std::vector<LaurentPoly> g;
    for (long n = 0; n < static_cast<long>(s.size()); ++n) g.push_back(s[n].scaled(A * pow(B, n) * pow(G, n * n)));
    EXPECT_TRUE(somos4_residual_check(g, alpha.scaled(pow(G, 6)), beta.scaled(pow(G, 8))).passed());
    if (G != 1) EXPECT_FALSE(somos4_residual_check(g, alpha, beta).passed());
  }
}

TEST(Recurrences, ResidualCheckReportsWitness) {
  auto s = somos4_seq({C(1), C(1), {C(1), C(1), C(1), C(1)}}, 9);
  s[7] = C(24);
  VerdictReport r = somos4_residual_check(s, C(1), C(1));
  ASSERT_FALSE(r.passed());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_TRUE(r.first_failure()->witness.has_value());
}

TEST(Recurrences, SplitMergeRoundTrip) {
  auto s = somos5_seq({C(1), C(1), {C(1), C(1), C(1), C(1), C(1)}}, 10);
  auto [even, odd] = split_even_odd(s);
  EXPECT_EQ(even.size(), 6u);
  EXPECT_EQ(odd.size(), 5u);
  EXPECT_EQ(merge_even_odd(even, odd), s);
}

TEST(Recurrences, InducedSomos4FromSomos5) {
  auto s = somos5_seq({V("a"), V("b"), {C(1), C(1), V("x"), V("y"), V("z")}}, 11);
  SomosParams p = induced_somos4_params(V("x"), V("y"), V("z"), V("a"), V("b"));
  EXPECT_EQ(p.alpha, P("b^2"));
  auto [even, odd] = split_even_odd(s);
  EXPECT_TRUE(somos4_residual_check(even, p.alpha, p.beta).passed());
  EXPECT_TRUE(somos4_residual_check(odd, p.alpha, p.beta).passed());
}

TEST(Invariants, NumericConstants) {
  auto s4 = somos4_seq({C(1), C(1), {C(1), C(1), C(1), C(1)}}, 9);
  for (const auto& v : invariant_T_run(s4, C(1), C(1), 5)) EXPECT_EQ(v.value, RatFunc(C(4)));
  auto s5 = somos5_seq({C(1), C(1), {C(1), C(1), C(1), C(1), C(1)}}, 9);
  for (const auto& v : invariant_Ttilde_run(s5, C(1), C(1), 5)) EXPECT_EQ(v.value, RatFunc(C(5)));
}

TEST(Invariants, ConstantOnRandomNumericRuns) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(1, 6);
  for (int t = 0; t < 8; ++t) {
    LaurentPoly al = C(d(rng)), be = C(d(rng));
    auto s = somos4_seq({al, be, {C(d(rng)), C(d(rng)), C(d(rng)), C(d(rng))}}, 10);
    auto run = invariant_T_run(s, al, be, 6);
    for (const auto& v : run) EXPECT_EQ(v.value, run.front().value);
  }
}

TEST(Invariants, XyzCaseValue) {
  LaurentPoly xyz = P("x*y*z");
  auto s = somos4_seq({xyz, xyz, {V("x"), C(1), C(1), V("y")}}, 8);
  for (const auto& v : invariant_T_run(s, xyz, xyz, 5)) EXPECT_EQ(v.value, RatFunc(P("y*z + x*y + x*z + z")));
}

TEST(Bilinear, CoupledRelationsHold) {
  auto s = somos5_seq({V("a"), V("b"), {C(1), C(1), V("x"), V("y"), V("z")}}, 11);
  auto [f, g] = split_even_odd(s);
  BTParams bt{V("a"), V("b"), V("a") * V("b")};
  EXPECT_TRUE(check_bt_pair(f, g, bt, P("b^2")).passed());
  EXPECT_TRUE(even_elimination_check(f, V("a"), V("b")).passed());
  EXPECT_TRUE(even_elimination_check(g, V("a"), V("b")).passed());
  BTParams wrong{V("b"), V("a"), V("a") * V("b")};
  EXPECT_FALSE(check_bt_pair(f, g, wrong, P("b^2")).passed());
}

TEST(A1Q, ThreeTermAndEmbedding) {
  EXPECT_EQ(a1q_three_term_coefficient(V("x"), V("b")), P("x + x^-1 + b*x^-1"));
  EXPECT_EQ(a1q_three_term_coefficient(V("x"), P("x^2 - 1")), P("2*x"));
  auto s = a1q_seq({V("b"), {C(1), V("x")}, std::nullopt}, 8);
  EXPECT_TRUE(a1q_three_term_check(s, V("x"), V("b")).passed());
  EXPECT_TRUE(a1q_somos4_embedding_check(s, V("x"), V("b")).passed());
  auto ones = a1q_seq({C(1), {C(1), C(1)}, std::nullopt}, 6);
  EXPECT_EQ(ones, ints({1, 1, 2, 5, 13, 34, 89}));
}

TEST(A1Q, ScaledFibonacci) {
  const GaussianRational i = GaussianRational::imaginary_unit();
  auto s = a1q_seq({C(-1), {C(1), V("x")}, std::nullopt}, 8);
  std::vector<GaussianPoly> sg;
  for (const auto& t : s) sg.push_back(specialize(t, Assignment<GaussianRational>{{"x", -i}}));
  auto f = scaled_a1q(sg, GaussianPoly(i));
  const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (std::size_t n = 0; n < f.size(); ++n) EXPECT_EQ(f[n], GaussianPoly(GaussianRational(fib[n])));
  EXPECT_TRUE(scaled_a1q_check(f, GaussianPoly(GaussianRational(-1)), GaussianPoly(i)).passed());
}

}  // namespace
}  // namespace somos
