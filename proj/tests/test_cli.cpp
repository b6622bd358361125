#include <somos/recurrences.hpp>
#include <somos/text_io.hpp>
#include <somos_cli/app.hpp>
#include <somos_cli/report.hpp>
#include <somos_cli/suites.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace somos::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "somos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, GenCsvNumeric) {
  auto r = run({"gen", "--system", "somos4", "--init", "1,1,1,1", "--alpha", "1", "--beta", "1", "--n", "11", "--format", "csv"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "1,1,1,1,2,3,7,23,59,314,1529,8209\n");
  r = run({"gen", "--system", "somos5", "--init", "1,1,1,1,1", "--alphat", "1", "--betat", "1", "--n", "7", "--format", "csv"});
  EXPECT_EQ(r.out, "1,1,1,1,1,2,3,5\n");
}

TEST(Cli, GenA1QText) {
  auto r = run({"gen", "--system", "a1q", "--init", "1,x", "--beta", "b", "--n", "3"});
  ASSERT_EQ(r.code, kPass);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<LaurentPoly> got;
  while (std::getline(lines, line)) got.push_back(parse_laurent(line.substr(line.find('=') + 2)));
  ASSERT_EQ(got.size(), 4u);
  EXPECT_EQ(got[2], parse_laurent("x^2 + b"));
  EXPECT_EQ(got[3], parse_laurent("(x^4 + 2*b*x^2 + b^2 + b)/x"));
}

TEST(Cli, GenJsonRoundTrip) {
  auto r = run({"gen", "--system", "somos4", "--init", "1,1,x,y", "--n", "7", "--format", "json"});
  ASSERT_EQ(r.code, kPass);
  auto want = somos4_seq({parse_laurent("r^2"), parse_laurent("b"),
                          {LaurentPoly(1L), LaurentPoly(1L), LaurentPoly::variable("x"), LaurentPoly::variable("y")}},
                         7);
  EXPECT_EQ(parse_terms_json(r.out), want);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kUsage);
  EXPECT_EQ(run({"gen", "--system", "somos4"}).code, kUsage);
  EXPECT_EQ(run({"gen", "--system", "somos4", "--init", "1,1,q,1"}).code, kUsage);
  EXPECT_EQ(run({"gen", "--system", "somos4", "--init", "1,1,1"}).code, kUsage);
  EXPECT_EQ(run({"gen", "--system", "somos4", "--init", "1,1,x,y", "--format", "csv"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--suite", "jacobi", "--format", "csv"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--suite", "jacobi", "--alpha", "r^3"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--suite", "jacobi", "--bind", "b=1"}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kPass);

  auto zero = run({"gen", "--system", "somos4", "--init", "1,1,1,1", "--alpha", "1", "--beta", "-1", "--n", "6"});
  EXPECT_EQ(zero.code, kDomain);
  EXPECT_NE(zero.err.find("S_4"), std::string::npos);

  EXPECT_EQ(run({"verify", "--suite", "jacobi", "--n", "4"}).code, kPass);
  auto bad = run({"verify", "--suite", "somos4-hankel", "--n", "3", "--bind", "x=0"});
  EXPECT_EQ(bad.code, kFail);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FibonacciPrintsDeterminants) {
  auto r = run({"verify", "--suite", "fibonacci", "--n", "8"});
  ASSERT_EQ(r.code, kPass);
  for (const char* v : {"(1)", "(2)", "(3)", "(5)", "(8)", "(13)", "(21)"}) EXPECT_NE(r.out.find(v), std::string::npos) << v;
}

TEST(Cli, ReportsAreByteIdentical) {
  std::vector<std::string> args = {"verify", "--suite", "poly4-cases", "--n", "6", "--seed", "9", "--format", "json"};
  auto a = run(args);
  auto j = args;
  j.insert(j.end(), {"--jobs", "4"});
  auto b = run(j);
  ASSERT_EQ(a.code, kPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\": \"9\""), std::string::npos);
}

TEST(Cli, InvariantCommand) {
  auto r = run({"invariant", "--system", "somos4", "--init", "x,1,1,y", "--alpha", "x*y*z", "--beta", "x*y*z"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("T[4] = 1*x^1*y^1 + 1*x^1*z^1 + 1*y^1*z^1 + 1*z^1"), std::string::npos);
  auto t = run({"invariant", "--system", "somos5", "--init", "1,1,1,1,1", "--alphat", "1", "--betat", "1", "--format", "json"});
  EXPECT_EQ(t.code, kPass);
  EXPECT_NE(t.out.find("\"witness\": \"5\""), std::string::npos);
}

TEST(Suites, RegistryComplete) {
  EXPECT_EQ(suite_registry().size(), 18u);
  EXPECT_NE(find_suite("family-f0"), nullptr);
  EXPECT_EQ(find_suite("all"), nullptr);
  EXPECT_THROW(run_suite("nope", {}, {}), std::invalid_argument);
}

TEST(Suites, TimingsAreOptIn) {
  SuiteContext ctx;
  ctx.depth = 3;
  VerdictReport r = run_suite("chebyshev", ctx, {2, false});
  ASSERT_TRUE(r.passed());
  for (const auto& it : r.items) EXPECT_EQ(it.ms, 0);
}

}  // namespace
}  // namespace somos::cli
