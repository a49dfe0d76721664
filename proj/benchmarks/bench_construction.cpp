#include <benchmark/benchmark.h>

#include "choosability/construction.hpp"

namespace cz = choosability;

static void BM_FieldConstruction(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cz::FiniteField(q));
}
BENCHMARK(BM_FieldConstruction)->Arg(16)->Arg(81)->Arg(128)->Arg(243)->Arg(256);

static void BM_FurediHypergraph(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cz::furedi_hypergraph(q, c));
  state.counters["edges"] = static_cast<double>((q * q - 1) / c);
}
BENCHMARK(BM_FurediHypergraph)->Args({16, 3})->Args({31, 5})->Args({64, 7})->Args({128, 1});

static void BM_HardInstance(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cz::hard_instance(q, c));
}
BENCHMARK(BM_HardInstance)->Args({16, 5})->Args({32, 1})->Args({64, 9});

static void BM_VerifyDesign(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  const auto h = cz::furedi_hypergraph(q, c);
  for (auto _ : state) benchmark::DoNotOptimize(cz::verify_design(h, q, c));
}
BENCHMARK(BM_VerifyDesign)->Args({9, 2})->Args({16, 5})->Args({27, 2});
