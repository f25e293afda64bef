#include <benchmark/benchmark.h>

#include "sddm/merger.hpp"
#include "sddm/oracle.hpp"
#include "sddm/region.hpp"

namespace {

sddm::MergerInputs reference_inputs() {
    sddm::MergerInputs m;
    m.acquirer.dps0 = 0.6;
    m.acquirer.discount_rate = 0.04;
    m.acquirer.shares = 1000.0;
    m.acquirer.growth = sddm::GrowthModel::from_moments(0.01, 0.02);
    m.target.dps0 = 0.3;
    m.target.discount_rate = 0.08;
    m.target.shares = 2500.0;
    m.target.growth = sddm::GrowthModel::from_moments(0.03, 0.09);
    m.merged_growth = sddm::GrowthModel::from_moments(0.03, 0.01);
    return m;
}

void BM_ValueCompany(benchmark::State& state) {
    const sddm::MergerInputs m = reference_inputs();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sddm::value_company(m.acquirer));
    }
}
BENCHMARK(BM_ValueCompany);

void BM_CombinedInterval(benchmark::State& state) {
    const sddm::MergerInputs m = reference_inputs();
    const sddm::MergerContext ctx = sddm::make_merger_context(m);
    for (auto _ : state) {
        const sddm::MergerValuation mv = sddm::merged_valuation(ctx, 0.03, 0.01);
        benchmark::DoNotOptimize(sddm::combined_interval(ctx, mv));
    }
}
BENCHMARK(BM_CombinedInterval);

void BM_RegionSweep(benchmark::State& state) {
    const sddm::MergerInputs m = reference_inputs();
    sddm::SweepConfig cfg;
    cfg.g_min = 0.0;
    cfg.g_max = 0.054;
    cfg.g_steps = static_cast<int>(state.range(0));
    cfg.sigmas = {0.01, 0.015, 0.02, 0.025};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sddm::sweep(m, cfg));
    }
}
BENCHMARK(BM_RegionSweep)->Arg(100)->Arg(500);

void BM_TruncatedVariance(benchmark::State& state) {
    const sddm::MergerInputs m = reference_inputs();
    const long long horizon = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sddm::truncated_variance_exact(m.acquirer, horizon));
    }
}
BENCHMARK(BM_TruncatedVariance)->Arg(1000)->Arg(4000);

void BM_SimulatePaths(benchmark::State& state) {
    sddm::CompanyParams c;
    c.dps0 = 0.6;
    c.discount_rate = 0.04;
    c.shares = 1000.0;
    c.growth = sddm::GrowthModel::from_states({-0.01, 0.03}, {0.5, 0.5});
    sddm::SimConfig cfg;
    cfg.horizon = 400;
    cfg.paths = state.range(0);
    cfg.seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sddm::simulate_price(c, cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.paths);
}
BENCHMARK(BM_SimulatePaths)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
