// Serial-reference vs OpenMP-parallel kernel timings. Every parallel kernel
// in the library keeps a bit-identical serial twin for testing; this target
// measures what the parallel versions buy on the current machine.
//
// Worker count follows OpenMP defaults; cap it with SYNODYNE_THREADS.

#include <benchmark/benchmark.h>

#include "synodyne/optimize.hpp"
#include "synodyne/params.hpp"
#include "synodyne/sim/force.hpp"
#include "synodyne/spectrum.hpp"

namespace {

using namespace synodyne;

SystemParams bench_params() { return make_params(0.2, 0.002, 0.0, std::nullopt, 0.9); }

void bm_spectrum_serial(benchmark::State& state) {
    const auto p = bench_params();
    const auto grid = resonance_grid(p.omega_m, 0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_table_serial(p, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_spectrum_parallel(benchmark::State& state) {
    const auto p = bench_params();
    const auto grid = resonance_grid(p.omega_m, 0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_table(p, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_sweep_serial(benchmark::State& state) {
    const auto p = bench_params();
    const auto grid = log_grid(1e-2, 1e2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_serial(p, grid, Objective::force));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_sweep_parallel(benchmark::State& state) {
    const auto p = bench_params();
    const auto grid = log_grid(1e-2, 1e2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(p, grid, Objective::force));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

sim::SimConfig force_cfg() {
    sim::SimConfig cfg;
    cfg.dt = 0.01;
    cfg.duration = 200.0;
    cfg.warmup = 10.0;
    cfg.seed = 1;
    return cfg;
}

void bm_force_serial(benchmark::State& state) {
    const auto p = bench_params();
    const auto tones = tones_from_spinor(optimal_force_spinor(p).spinor, 2.0, p.omega_m);
    const sim::ForceProfile drive{1.0, p.omega_m, 0.0};
    const auto cfg = force_cfg();
    const int reps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::estimate_force_serial(p, tones, drive, cfg, reps));
    state.SetItemsProcessed(state.iterations() * reps);
}

void bm_force_parallel(benchmark::State& state) {
    const auto p = bench_params();
    const auto tones = tones_from_spinor(optimal_force_spinor(p).spinor, 2.0, p.omega_m);
    const sim::ForceProfile drive{1.0, p.omega_m, 0.0};
    const auto cfg = force_cfg();
    const int reps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::estimate_force(p, tones, drive, cfg, reps));
    state.SetItemsProcessed(state.iterations() * reps);
}

}  // namespace

BENCHMARK(bm_spectrum_serial)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_spectrum_parallel)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep_serial)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep_parallel)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_force_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_force_parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
