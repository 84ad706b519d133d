// Parallel vs serial factorization enumeration.
#include "puiseux/kernels.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

const std::vector<std::uint64_t> kWeights{7, 11, 13, 17};

void BM_Parallel(benchmark::State& state) {
  const auto target = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(puiseux::kernels::knapsack_solutions(kWeights, target));
  }
}

void BM_Serial(benchmark::State& state) {
  const auto target = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(puiseux::kernels::serial::knapsack_solutions(kWeights, target));
  }
}

}  // namespace

BENCHMARK(BM_Parallel)->Arg(200)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Serial)->Arg(200)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
