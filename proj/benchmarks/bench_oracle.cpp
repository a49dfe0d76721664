#include <benchmark/benchmark.h>

#include "choosability/oracle.hpp"

namespace cz = choosability;

static void BM_EnumerateComplete(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = cz::enumerate_canonical_assignments(n, k, 1, [](const cz::ListAssignment&) { return true; });
  }
  state.counters["assignments"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateComplete)->Args({4, 2})->Args({5, 2})->Args({4, 3})->Args({5, 3});

static void BM_ExactChiComplete(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cz::exact_chi_l_complete(n, c));
}
BENCHMARK(BM_ExactChiComplete)->Args({4, 1})->Args({5, 1})->Args({3, 2})->Args({4, 2});

static void BM_ConjectureProbe(benchmark::State& state) {
  const auto n_max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cz::conjecture_probe(n_max, 1, 4));
}
BENCHMARK(BM_ConjectureProbe)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
