#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "choosability/construction.hpp"
#include "choosability/solver.hpp"

namespace cz = choosability;

static void BM_ColorableHardInstance(benchmark::State& state) {
  const auto l = cz::hard_instance(static_cast<std::uint64_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cz::colorable(l));
  state.counters["n"] = static_cast<double>(l.n());
}
BENCHMARK(BM_ColorableHardInstance)->Args({5, 2})->Args({16, 5})->Args({32, 1})->Args({64, 9});

// Random k-lists over a universe of 2n colors: almost always colorable.
static void BM_ColorableRandom(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  std::mt19937 rng(1);
  cz::ListAssignment l{k, k, 2 * n, {}};
  std::vector<cz::Color> pool(2 * n);
  for (std::uint32_t i = 0; i < pool.size(); ++i) pool[i] = i;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<cz::Color> list(pool.begin(), pool.begin() + k);
    std::sort(list.begin(), list.end());
    l.lists.push_back(std::move(list));
  }
  for (auto _ : state) benchmark::DoNotOptimize(cz::colorable(l));
}
BENCHMARK(BM_ColorableRandom)->Args({1000, 8})->Args({10000, 16})->Args({100000, 8});

static void BM_ValidateAssignment(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  const auto l = cz::hard_instance(q, c);
  for (auto _ : state) benchmark::DoNotOptimize(cz::validate_assignment(l, static_cast<std::uint32_t>(q), c));
}
BENCHMARK(BM_ValidateAssignment)->Args({16, 5})->Args({32, 1});
