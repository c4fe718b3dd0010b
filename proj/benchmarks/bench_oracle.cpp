#include <benchmark/benchmark.h>

#include "k4steiner/generators.hpp"
#include "k4steiner/oracle.hpp"

namespace {

void BM_DreyfusWagnerGrid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const k4st::Instance inst = k4st::grid_one_face(6, 6, k, 5, {1, 9});
  for (auto _ : state) benchmark::DoNotOptimize(k4st::dreyfus_wagner(inst.graph, inst.terminals));
}
BENCHMARK(BM_DreyfusWagnerGrid)->DenseRange(3, 9, 2);

void BM_ReductionOracle(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const k4st::Instance inst = k4st::random_connected(9, 3, l, 23);
  for (auto _ : state) benchmark::DoNotOptimize(k4st::solve_vest_by_reduction(inst));
}
BENCHMARK(BM_ReductionOracle)->DenseRange(0, 4, 2);

}  // namespace
