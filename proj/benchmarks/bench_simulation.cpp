#include "claimsim/claimsim.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace claimsim;

SimulationConfig small_config(std::uint64_t seed) {
    SimulationConfig cfg = default_config();
    cfg.n_periods = 20;
    cfg.exposure = {1000.0};
    cfg.frequency = {0.10};
    cfg.master_seed = seed;
    return cfg;
}

void BM_SimulateClaim(benchmark::State& state) {
    const SimulationConfig cfg = small_config(7);
    const PaidLossHooks hooks = default_hooks(cfg);
    int index = 0;
    for (auto _ : state) {
        ClaimRecord claim = simulate_claim(cfg, hooks, 1 + (index % cfg.n_periods), index / 4);
        benchmark::DoNotOptimize(claim);
        ++index;
    }
}
BENCHMARK(BM_SimulateClaim);

void BM_ConsolidateClaim(benchmark::State& state) {
    const SimulationConfig cfg = small_config(11);
    const PaidLossHooks hooks = default_hooks(cfg);
    std::vector<ClaimRecord> claims;
    std::vector<Timeline> timelines;
    for (int r = 0; r < 256; ++r) {
        claims.push_back(simulate_claim(cfg, hooks, 1 + (r % cfg.n_periods), r));
        timelines.push_back(build_timeline(cfg, claims.back()));
    }
    std::size_t k = 0;
    for (auto _ : state) {
        const ClaimRecord& claim = claims[k % claims.size()];
        const Timeline& timeline = timelines[k % claims.size()];
        EstimatePath path =
            consolidate_backward(claim, timeline, claim.payment_amounts, cfg.kappa);
        benchmark::DoNotOptimize(path);
        ++k;
    }
}
BENCHMARK(BM_ConsolidateClaim);

void BM_FullPortfolio(benchmark::State& state) {
    SimulationConfig cfg = small_config(23);
    cfg.exposure = {static_cast<double>(state.range(0))};
    RunOptions options;
    options.threads = 1;
    for (auto _ : state) {
        SimulationResult result = run_simulation(cfg, options);
        benchmark::DoNotOptimize(result);
        state.counters["claims"] =
            benchmark::Counter(static_cast<double>(result.claims.size()));
    }
}
BENCHMARK(BM_FullPortfolio)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AggregateTriangle(benchmark::State& state) {
    SimulationConfig cfg = small_config(31);
    cfg.exposure = {2000.0};
    const SimulationResult result = run_simulation(cfg, RunOptions{});
    for (auto _ : state) {
        Triangle tri = aggregate_triangle(result.claims, result.transactions,
                                          AggregateKind::IncurredEstimate, cfg.n_periods);
        benchmark::DoNotOptimize(tri);
    }
    state.counters["transactions"] =
        benchmark::Counter(static_cast<double>(result.transactions.size()));
}
BENCHMARK(BM_AggregateTriangle);

} // namespace

BENCHMARK_MAIN();
