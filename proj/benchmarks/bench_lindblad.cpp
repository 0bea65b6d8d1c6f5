#include <benchmark/benchmark.h>

#include "mzi/density.hpp"
#include "mzi/lindblad.hpp"

using namespace mzi;

namespace {

void BM_lindblad_rhs(benchmark::State& state) {
    const BathParams bath(1.0, 0.01);
    const DensityMatrix2 rho = density_from_bloch(0.6, 0.2, 0.3);
    for (auto _ : state) {
        DensityRates d = lindblad_rhs(rho, bath);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_lindblad_rhs);

void BM_integrate(benchmark::State& state) {
    const BathParams bath(1.0, 0.01);
    const DensityMatrix2 rho0 = density_from_bloch(0.6, 0.2, 0.3);
    const double t_final = static_cast<double>(state.range(0));
    for (auto _ : state) {
        EvolutionResult r = integrate(rho0, bath, t_final, 1e-3, 1000);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(t_final / 1e-3));
}
BENCHMARK(BM_integrate)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_analytic_solution(benchmark::State& state) {
    const BathParams bath(1.0, 0.01);
    const DensityMatrix2 rho0 = density_from_bloch(0.6, 0.2, 0.3);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        DensityMatrix2 r = analytic_solution(rho0, bath, t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_analytic_solution);

}  // namespace

BENCHMARK_MAIN();
