// Serial reference kernel vs the OpenMP kernel on experiment-sized batches.

#include <benchmark/benchmark.h>

#include <vector>

#include "smece/random.hpp"
#include "smece/replication.hpp"

namespace {

std::vector<smece::ReplicationTask> make_tasks(std::size_t reps, std::size_t n) {
  std::vector<smece::ReplicationTask> tasks;
  for (std::size_t r = 0; r < reps; ++r) {
    tasks.push_back({2.0, n, smece::derive_replication_seed(7, 0, 0, r)});
  }
  return tasks;
}

void BM_Serial(benchmark::State& state) {
  const auto tasks = make_tasks(64, static_cast<std::size_t>(state.range(0)));
  const smece::KernelOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smece::score_replications_serial(tasks, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tasks.size()) * state.range(0));
}

void BM_Parallel(benchmark::State& state) {
  const auto tasks = make_tasks(64, static_cast<std::size_t>(state.range(0)));
  const smece::KernelOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smece::score_replications_parallel(tasks, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tasks.size()) * state.range(0));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
