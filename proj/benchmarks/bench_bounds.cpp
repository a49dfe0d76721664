#include <benchmark/benchmark.h>

#include "choosability/bounds.hpp"

namespace cz = choosability;

static void BM_UpperBound(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cz::upper_bound(n, 2));
}
BENCHMARK(BM_UpperBound)->Arg(1000)->Arg(1000000)->Arg(100000000);

static void BM_LowerBoundConstructive(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cz::lower_bound_constructive(n, 3));
}
BENCHMARK(BM_LowerBoundConstructive)->Arg(1000)->Arg(1000000)->Arg(100000000);

static void BM_FindAdmissiblePrime(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cz::find_admissible_prime(n, 2));
}
BENCHMARK(BM_FindAdmissiblePrime)->Arg(1000000)->Arg(100000000)->Arg(1000000000000LL);

static void BM_BoundsReportRange(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= 2000; ++n) benchmark::DoNotOptimize(cz::bounds_report(n, 3));
  }
}
BENCHMARK(BM_BoundsReportRange);
