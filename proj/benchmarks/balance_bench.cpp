#include <cstdint>
#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "fulltree/alt_power_list.hpp"
#include "fulltree/binary_list.hpp"
#include "fulltree/naive.hpp"

namespace {

std::vector<std::uint64_t> labels_of(std::int64_t n) {
  std::vector<std::uint64_t> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  return labels;
}

void BM_balance_naive(benchmark::State& state) {
  const auto labels = labels_of(state.range(0));
  for (auto _ : state) {
    auto result = fulltree::naive::balance(labels);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_balance_naive)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

void BM_balance_typed(benchmark::State& state) {
  const auto labels = labels_of(state.range(0));
  for (auto _ : state) {
    auto result = fulltree::balance_typed(labels);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_balance_typed)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

void BM_balance_structural(benchmark::State& state) {
  const auto labels = labels_of(state.range(0));
  for (auto _ : state) {
    auto result = fulltree::balance_structural(labels);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_balance_structural)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

void BM_binary_list_build(benchmark::State& state) {
  const auto labels = labels_of(state.range(0));
  for (auto _ : state) {
    auto list = fulltree::bl_of_list(labels);
    benchmark::DoNotOptimize(list);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_binary_list_build)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
