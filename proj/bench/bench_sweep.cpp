#include <benchmark/benchmark.h>

#include <numeric>

#include "cyclenc/sweep.hpp"

namespace {

std::vector<cyclenc::SweepJob> jobs_up_to(int n_max) {
    std::vector<int> ns(n_max - 1);
    std::iota(ns.begin(), ns.end(), 2);
    return cyclenc::make_jobs(ns, {std::begin(cyclenc::kAllProtocols), std::end(cyclenc::kAllProtocols)});
}

void BM_SweepSerial(benchmark::State& state) {
    const auto jobs = jobs_up_to(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cyclenc::sweep_serial(jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(jobs.size()));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto jobs = jobs_up_to(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cyclenc::sweep_parallel(jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(jobs.size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
