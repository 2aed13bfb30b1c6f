#include <benchmark/benchmark.h>

#include "lowlying/arith.hpp"
#include "lowlying/chebyshev.hpp"
#include "lowlying/deltasym.hpp"
#include "lowlying/rmt.hpp"

using namespace lowlying;

static void BM_Kloosterman(benchmark::State& state) {
  const auto c = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::kloosterman(3, 5, c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Kloosterman)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

static void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(11, x));
}
BENCHMARK(BM_BesselJ)->Arg(5)->Arg(50)->Arg(5000);

static void BM_DeltaSymbol(benchmark::State& state) {
  const DeltaParams dp{1, 12, 1e-8, 1};
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_symbol(dp, m, 1));
}
BENCHMARK(BM_DeltaSymbol)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_Linearization(benchmark::State& state) {
  const int varpi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev::linearization_table(varpi, 3));
}
BENCHMARK(BM_Linearization)->Arg(4)->Arg(16)->Arg(64);

static void BM_SampleAndZeros(benchmark::State& state) {
  const auto cls = static_cast<SymmetryClass>(state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenphases_to_zeros(sample_matrix(cls, 100, rng)).zeros.data());
  state.SetLabel(to_string(cls));
}
BENCHMARK(BM_SampleAndZeros)
    ->Arg(static_cast<int>(SymmetryClass::SOeven))
    ->Arg(static_cast<int>(SymmetryClass::SOodd))
    ->Arg(static_cast<int>(SymmetryClass::Sp))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
