#include "nmzeno/entanglement.hpp"
#include "nmzeno/presets.hpp"
#include "nmzeno/scenario.hpp"
#include "nmzeno/survival.hpp"
#include "nmzeno/zeno.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<double> grid(double tau_max, double step) {
    std::vector<double> out;
    for (int i = 0; i * step <= tau_max + 1e-12; ++i) {
        out.push_back(i * step);
    }
    return out;
}

void BM_AnalyticGrid(benchmark::State& state) {
    const auto params = nmzeno::SystemParams::dimensionless(4, 0.1, 2.0);
    const auto taus = grid(50.0, 0.01);
    for (auto _ : state) {
        double acc = 0.0;
        for (double tau : taus) {
            acc += nmzeno::survival_probability(params, tau);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(taus.size()));
}
BENCHMARK(BM_AnalyticGrid);

void BM_KernelOde(benchmark::State& state) {
    const auto params = nmzeno::SystemParams::dimensionless(4, 10.0, 0.0);
    const auto taus = grid(2.0, 0.001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmzeno::amplitude_kernel_ode(params, taus));
    }
}
BENCHMARK(BM_KernelOde)->Unit(benchmark::kMillisecond);

void BM_DiscreteBath(benchmark::State& state) {
    const auto params = nmzeno::SystemParams::dimensionless(4, 0.1, 0.0);
    const nmzeno::BathDiscretization bath{static_cast<int>(state.range(0)), 50.0};
    const auto taus = grid(2.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmzeno::amplitude_discrete_bath(params, bath, taus));
    }
}
BENCHMARK(BM_DiscreteBath)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Wootters(benchmark::State& state) {
    const nmzeno::PairState rho = nmzeno::pair_density_matrix(0.3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmzeno::wootters_concurrence(rho));
    }
}
BENCHMARK(BM_Wootters);

void BM_ThresholdTime(benchmark::State& state) {
    const auto params = nmzeno::SystemParams::dimensionless(4, 0.1, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmzeno::threshold_time(params));
    }
}
BENCHMARK(BM_ThresholdTime)->Unit(benchmark::kMicrosecond);

void BM_PresetFig3d(benchmark::State& state) {
    const nmzeno::Scenario scenario = nmzeno::find_preset("fig3d").scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmzeno::run_scenario(scenario));
    }
}
BENCHMARK(BM_PresetFig3d)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
