// Serial vs OpenMP basis evaluation, and serial vs parallel parameter sweeps.
#include "hetc/config.hpp"
#include "hetc/kernels/basis_kernels.hpp"
#include "hetc/rbf.hpp"
#include "hetc/sweep.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

hetc::RbfBasis grid(std::size_t dims, std::size_t per_dim) {
    std::vector<std::pair<double, double>> ranges(dims, {-3.0, 3.0});
    return hetc::RbfBasis::grid(ranges, per_dim, 1.0);
}

// nodes per dimension in 4-D: 5 -> 625, 9 -> 6561, 13 -> 28561
void BM_BasisSerial(benchmark::State& state) {
    const auto basis = grid(4, static_cast<std::size_t>(state.range(0)));
    const std::vector<double> x{0.3, -0.2, 0.1, 0.7};
    std::vector<double> out(basis.node_count());
    for (auto _ : state) {
        hetc::kernels::gaussian_basis_serial(x, basis.centers(), basis.width(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * basis.node_count()));
}

void BM_BasisOmp(benchmark::State& state) {
    const auto basis = grid(4, static_cast<std::size_t>(state.range(0)));
    const std::vector<double> x{0.3, -0.2, 0.1, 0.7};
    std::vector<double> out(basis.node_count());
    for (auto _ : state) {
        hetc::kernels::gaussian_basis_omp(x, basis.centers(), basis.width(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * basis.node_count()));
}

const std::vector<double> kSweepValues{0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};

hetc::ExperimentConfig sweep_base() {
    auto c = hetc::example_preset();
    c.sim.duration_s = 1.0;
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto base = sweep_base();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetc::run_sweep_serial(base, "trigger.t", kSweepValues));
    }
}

void BM_SweepParallel(benchmark::State& state) {
    const auto base = sweep_base();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetc::run_sweep(base, "trigger.t", kSweepValues));
    }
}

}  // namespace

BENCHMARK(BM_BasisSerial)->Arg(5)->Arg(9)->Arg(13);
BENCHMARK(BM_BasisOmp)->Arg(5)->Arg(9)->Arg(13);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
