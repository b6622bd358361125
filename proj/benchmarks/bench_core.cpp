#include <somos/coeff_seq.hpp>
#include <somos/hankel.hpp>
#include <somos/recurrences.hpp>
#include <somos/sx_engine.hpp>
#include <somos/text_io.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace somos;

LaurentPoly V(const char* n) { return LaurentPoly::variable(n); }
LaurentPoly one() { return LaurentPoly(Rational(1)); }

std::vector<LaurentPoly> symbolic_somos4(std::size_t n) {
  return somos4_seq({V("r") * V("r"), V("b"), {one(), one(), V("x"), V("y")}}, n);
}

void BM_Multiply(benchmark::State& state) {
  auto s = symbolic_somos4(static_cast<std::size_t>(state.range(0)));
  const LaurentPoly& a = s[s.size() - 1];
  const LaurentPoly& b = s[s.size() - 2];
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(10)->Arg(12);

void BM_ExactDivision(benchmark::State& state) {
  auto s = symbolic_somos4(static_cast<std::size_t>(state.range(0)));
  const LaurentPoly& a = s[s.size() - 1];
  const LaurentPoly& b = s[s.size() - 2];
  LaurentPoly prod = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(prod, b));
}
BENCHMARK(BM_ExactDivision)->Arg(8)->Arg(10)->Arg(12);

void BM_Somos4Sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_somos4(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Somos4Sequence)->Arg(10)->Arg(14);

void BM_Somos5Sequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        somos5_seq({V("a"), V("b"), {one(), one(), V("x"), V("y"), V("z")}}, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Somos5Sequence)->Arg(9)->Arg(12);

void BM_BareissSomos4Hankel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CoeffSeq p = somos4_entries(V("x"), V("y"), V("b"), V("r"));
  PolyMatrix m = hankel_matrix(p, n);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_BareissSomos4Hankel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_LaplaceSomos4Hankel(benchmark::State& state) {
  CoeffSeq p = somos4_entries(V("x"), V("y"), V("b"), V("r"));
  PolyMatrix m = hankel_matrix(p, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_laplace(m));
}
BENCHMARK(BM_LaplaceSomos4Hankel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SXTrajectory(benchmark::State& state) {
  SXState s0 = SXState::from(somos4_initials(V("x"), V("y"), V("b"), V("r")));
  for (auto _ : state) benchmark::DoNotOptimize(SXTrajectory::run(s0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SXTrajectory)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
