// Microbenchmarks comparing the OpenMP sweep kernels against the serial
// reference implementations on a realistic density grid.

#include <benchmark/benchmark.h>

#include <vector>

#include "spd/fixtures.hpp"
#include "spd/sweep.hpp"

namespace {

std::vector<double> grid(int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = -5.0 + 10.0 * i / (n - 1);
    return xs;
}

void bench_density_parallel(benchmark::State& state) {
    const spd::ExponentSuite suite(spd::fixtures::stable15());
    const auto xs = grid(static_cast<int>(state.range(0)));
    spd::OracleConfig cfg;
    cfg.rel_tol = 1e-7;
    for (auto _ : state) {
        auto rows = spd::density_sweep(suite, 1.0, xs, spd::SweepMethod::all, cfg);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bench_density_serial(benchmark::State& state) {
    const spd::ExponentSuite suite(spd::fixtures::stable15());
    const auto xs = grid(static_cast<int>(state.range(0)));
    spd::OracleConfig cfg;
    cfg.rel_tol = 1e-7;
    for (auto _ : state) {
        auto rows =
            spd::density_sweep_serial(suite, 1.0, xs, spd::SweepMethod::all, cfg);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bench_functional_parallel(benchmark::State& state) {
    const spd::ExponentSuite suite(spd::fixtures::tempered15());
    const auto xs = grid(static_cast<int>(state.range(0)));
    const std::vector<std::string> what = {"phi", "Phi", "psi", "nu_bar"};
    for (auto _ : state) {
        auto table = spd::functional_sweep(suite, what, xs);
        benchmark::DoNotOptimize(table);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bench_functional_serial(benchmark::State& state) {
    const spd::ExponentSuite suite(spd::fixtures::tempered15());
    const auto xs = grid(static_cast<int>(state.range(0)));
    const std::vector<std::string> what = {"phi", "Phi", "psi", "nu_bar"};
    for (auto _ : state) {
        auto table = spd::functional_sweep_serial(suite, what, xs);
        benchmark::DoNotOptimize(table);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(bench_density_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_density_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_functional_parallel)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_functional_serial)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
