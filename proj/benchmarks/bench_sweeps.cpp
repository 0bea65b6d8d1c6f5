#include <benchmark/benchmark.h>

#include <sstream>

#include "sweep.hpp"

using namespace mzi::cli;

namespace {

void BM_fig1_sweep(benchmark::State& state) {
    SweepSpec spec = default_spec(Mode::kFig1);
    spec.theta_steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::ostringstream csv, diag;
        run_sweep(spec, csv, diag);
        benchmark::DoNotOptimize(csv);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_fig1_sweep)->Arg(200)->Arg(2000);

void BM_fig2_sweep(benchmark::State& state) {
    SweepSpec spec = default_spec(Mode::kFig2);
    spec.theta_steps = static_cast<int>(state.range(0));
    spec.y_steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::ostringstream csv, diag;
        run_sweep(spec, csv, diag);
        benchmark::DoNotOptimize(csv);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_fig2_sweep)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
