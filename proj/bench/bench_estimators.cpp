// Serial reference estimators against the OpenMP kernels on the unit square.

#include <benchmark/benchmark.h>

#include "polyangle/estimators.hpp"

using namespace polyangle;

namespace {

const RegionSpec kSquare = RegularNGon{4, 1.0};

void BM_GridSerial(benchmark::State& state) {
  const GridConfig cfg{static_cast<int>(state.range(0)), GridMode::paper_exact};
  for (auto _ : state) benchmark::DoNotOptimize(reference::grid_estimate(kSquare, cfg));
}

void BM_GridParallel(benchmark::State& state) {
  const GridConfig cfg{static_cast<int>(state.range(0)), GridMode::paper_exact};
  for (auto _ : state) benchmark::DoNotOptimize(grid_estimate(kSquare, cfg));
}

void BM_McSerial(benchmark::State& state) {
  const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 42, 65536};
  for (auto _ : state) benchmark::DoNotOptimize(reference::mc_estimate(kSquare, cfg));
}

void BM_McParallel(benchmark::State& state) {
  const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 42, 65536};
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate(kSquare, cfg));
}

void BM_QuadSerial(benchmark::State& state) {
  const QuadratureConfig cfg{16, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(reference::quad_estimate(kSquare, cfg));
}

void BM_QuadParallel(benchmark::State& state) {
  const QuadratureConfig cfg{16, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(quad_estimate(kSquare, cfg));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_McSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_McParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuadSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuadParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
