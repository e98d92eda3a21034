#include "hfg/fatgrid.hpp"
#include "hfg/kernels.hpp"
#include "hfg/verify.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace hfg;

namespace {

IntMatrix example_conditions(unsigned d) {
  const auto points = grid_fat_points(abstract_grid({2, 3, 3}, {2, 3, 4, 4}));
  return condition_matrix(points, d);
}

void BM_RankSerial(benchmark::State& state) {
  const IntMatrix m = example_conditions(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank_serial(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_RankParallel(benchmark::State& state) {
  const IntMatrix m = example_conditions(static_cast<unsigned>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

} // namespace

BENCHMARK(BM_RankSerial)->Arg(16)->Arg(20)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->ArgsProduct({{16, 20, 23}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
