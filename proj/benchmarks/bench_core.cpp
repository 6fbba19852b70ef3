#include <benchmark/benchmark.h>

#include <sstream>

#include "lqnet/equilibrium.hpp"
#include "lqnet/graph.hpp"
#include "lqnet/io.hpp"
#include "lqnet/simulation.hpp"
#include "lqnet/stats.hpp"
#include "lqnet/welfare.hpp"

namespace {

void BM_EquilibriumEffortAllNetworks(benchmark::State& state)
{
    const lqnet::GameParams p;
    std::vector<lqnet::Network> nets;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) nets.push_back(lqnet::network_from_mask(5, mask));
    for (auto _ : state)
        for (const auto& g : nets) benchmark::DoNotOptimize(lqnet::equilibrium_effort(g, p));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_EquilibriumEffortAllNetworks);

void BM_EnumerateEquilibria(benchmark::State& state)
{
    const lqnet::GameParams p;
    for (auto _ : state)
        benchmark::DoNotOptimize(lqnet::enumerate_equilibria(p, 1e-9, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EnumerateEquilibria)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_OptimizeWelfare(benchmark::State& state)
{
    const lqnet::GameParams p;
    for (auto _ : state) benchmark::DoNotOptimize(lqnet::optimize_welfare(p));
}
BENCHMARK(BM_OptimizeWelfare)->Unit(benchmark::kMillisecond);

void BM_RunBatch(benchmark::State& state)
{
    auto c = lqnet::SimConfig::for_treatment(lqnet::Treatment::Interaction);
    for (auto _ : state)
        benchmark::DoNotOptimize(lqnet::run_batch(c, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_RunBatch)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_WriteHistoryCsv(benchmark::State& state)
{
    const auto batch = lqnet::run_batch(lqnet::SimConfig::for_treatment(lqnet::Treatment::Baseline), 10);
    for (auto _ : state) {
        std::ostringstream out;
        lqnet::write_history_csv(out, batch);
        benchmark::DoNotOptimize(out.str().size());
    }
}
BENCHMARK(BM_WriteHistoryCsv)->Unit(benchmark::kMillisecond);

void BM_MannWhitneyExact(benchmark::State& state)
{
    const std::vector<double> a{1, 4, 4, 7, 9, 12};
    const std::vector<double> b{2, 3, 4, 8, 10, 11};
    for (auto _ : state) benchmark::DoNotOptimize(lqnet::mann_whitney_u(a, b));
}
BENCHMARK(BM_MannWhitneyExact);

}  // namespace

BENCHMARK_MAIN();
