#include <benchmark/benchmark.h>

#include "support/instances.hpp"
#include "toricfano/numcheck.hpp"

using namespace toricfano;
using namespace toricfano::testing;

static void BM_RootSystemD(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build({{DynkinLetter::D, rank}}));
}
BENCHMARK(BM_RootSystemD)->Arg(10)->Arg(16);

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build({{DynkinLetter::E, 8}}));
}
BENCHMARK(BM_RootSystemE8);

static void BM_FlagBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rs = RootSystem::build({{DynkinLetter::D, static_cast<int>(2 * n)}});
  for (auto _ : state) benchmark::DoNotOptimize(FlagManifold::build(rs, Painting{{n - 1, 2 * n - 1}}));
}
BENCHMARK(BM_FlagBuild)->Arg(5)->Arg(8);

static void BM_FanoCheckSO4n(benchmark::State& state) {
  const auto inst = so4n_standard(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fano_check(inst.flag, inst.fan, inst.tau));
}
BENCHMARK(BM_FanoCheckSO4n)->Arg(5)->Arg(8);

static void BM_ScalarScanSO20(benchmark::State& state) {
  for (auto _ : state)
    for (long long k = 1; k <= 20; ++k) {
      const auto inst = so4n(5, Rational(k));
      benchmark::DoNotOptimize(fano_check(inst.flag, inst.fan, inst.tau).is_fano);
    }
}
BENCHMARK(BM_ScalarScanSO20);

static void BM_CanonicalPolytope(benchmark::State& state) {
  const auto fan = product(projective_space(2), projective_space(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_polytope(fan));
}
BENCHMARK(BM_CanonicalPolytope)->Arg(1)->Arg(3);

static void BM_Barycenter(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numcheck::barycenter_integral(m, m == 1 ? 10000 : 100000));
}
BENCHMARK(BM_Barycenter)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
