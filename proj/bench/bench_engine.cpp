#include <benchmark/benchmark.h>

#include "smaa/engine.hpp"
#include "smaa/io.hpp"

namespace {

smaa::SortingProblem school(std::int64_t iterations) {
    auto p = smaa::load_problem_file(SMAA_DATA_DIR "/school.json");
    p.settings.iterations = static_cast<std::size_t>(iterations);
    return p;
}

void BM_serial(benchmark::State& state) {
    const auto p = school(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(smaa::run_simulation_serial(p));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_parallel(benchmark::State& state) {
    const auto p = school(state.range(0));
    const auto workers = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(smaa::run_simulation_parallel(p, workers));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)
    ->ArgsProduct({{10'000, 100'000}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
