// Serial reference vs OpenMP kernels. Thread count is the second argument
// of the parallel variants (0 = OpenMP default).
#include <benchmark/benchmark.h>

#include "hypercross/crossing.hpp"
#include "hypercross/moment.hpp"

using namespace hypercross;

static void BM_CrossingPairsSerial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto c = moment_config(unit_moment_params(d, 2 * d));
  for (auto _ : state) benchmark::DoNotOptimize(count_crossing_pairs_serial(c, d).crossing_count);
}
BENCHMARK(BM_CrossingPairsSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CrossingPairsParallel(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto c = moment_config(unit_moment_params(d, 2 * d));
  const CountOptions options{false, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(count_crossing_pairs(c, d, options).crossing_count);
}
BENCHMARK(BM_CrossingPairsParallel)
    ->ArgsProduct({{3, 4, 5}, {0, 2, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_MomentEnumSerial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_moment_crossings_enum_serial(d));
}
BENCHMARK(BM_MomentEnumSerial)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_MomentEnumParallel(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_moment_crossings_enum(d, threads));
}
BENCHMARK(BM_MomentEnumParallel)
    ->ArgsProduct({{10, 12, 14}, {0, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
