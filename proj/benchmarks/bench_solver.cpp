#include <benchmark/benchmark.h>

#include "k4steiner/generators.hpp"
#include "k4steiner/reduce.hpp"
#include "k4steiner/solver.hpp"

namespace {

// Unit r x r grid with every boundary vertex a terminal, as in `k4st bench`.
void BM_SolveBoundaryGrid(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const k4st::Instance inst = k4st::grid_one_face(r, r, 4 * r - 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(k4st::solve(inst));
  state.counters["n"] = static_cast<double>(r * r);
  state.SetComplexityN(static_cast<std::int64_t>(r * r));
}
BENCHMARK(BM_SolveBoundaryGrid)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SolveWeightedGrid(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const k4st::Instance inst = k4st::grid_one_face(r, r, r, 3, {1, 9});
  for (auto _ : state) benchmark::DoNotOptimize(k4st::solve(inst));
}
BENCHMARK(BM_SolveWeightedGrid)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SolveStackedWheel(benchmark::State& state) {
  const auto rim = static_cast<std::size_t>(state.range(0));
  const k4st::Instance inst = k4st::stacked_wheel(rim, rim, rim / 2, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(k4st::solve(inst));
}
BENCHMARK(BM_SolveStackedWheel)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

void BM_Preprocess(benchmark::State& state) {
  const k4st::Instance inst = k4st::random_connected(static_cast<std::size_t>(state.range(0)), 5, 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(k4st::preprocess(inst));
}
BENCHMARK(BM_Preprocess)->Arg(16)->Arg(64);

}  // namespace
