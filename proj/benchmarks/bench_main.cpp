#include <benchmark/benchmark.h>

#include "hypercov/exact_count.hpp"
#include "hypercov/mc_sim.hpp"
#include "hypercov/oracle.hpp"
#include "hypercov/samplers.hpp"
#include "hypercov/sweep.hpp"

using namespace hypercov;

static void BM_GenLhTrial(benchmark::State& state) {
    const SamplerConfig cfg{DesignSpec::latin(5, static_cast<std::uint32_t>(state.range(0))), 1};
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gen_lh_trial(cfg, i++));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenLhTrial)->Arg(64)->Arg(512)->Arg(4096);

static void BM_GenOsTrial(benchmark::State& state) {
    const SamplerConfig cfg{DesignSpec::orthogonal(3, static_cast<std::uint32_t>(state.range(0))), 1,
                            SamplerKind::OS};
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gen_os_trial(cfg, i++));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_GenOsTrial)->Arg(4)->Arg(8)->Arg(16);

static void BM_ExactCoverage(benchmark::State& state) {
    const auto spec = DesignSpec::latin(3, 16);
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expected_coverage_multiset(IntersectionKind::LhsTuple, spec, k));
}
BENCHMARK(BM_ExactCoverage)->Arg(8)->Arg(64)->Arg(512);

static void BM_OracleCoverage(benchmark::State& state) {
    const auto set = enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_expected_coverage(set, 3));
}
BENCHMARK(BM_OracleCoverage);

static void BM_SimulateFull(benchmark::State& state) {
    SimPlan plan{DesignSpec::latin(2, 100)};
    plan.k = 100;
    plan.reps = static_cast<std::uint64_t>(state.range(0));
    plan.exact_reference = false;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_coverage(plan));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateFull)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormSearch(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_k_closed_form(n, 3, 0.5));
}
BENCHMARK(BM_ClosedFormSearch)->Arg(64)->Arg(512);
BENCHMARK_MAIN();
