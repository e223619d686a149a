#include <benchmark/benchmark.h>

#include "brw/conditioned.hpp"
#include "brw/ensemble.hpp"
#include "brw/errors.hpp"
#include "brw/gw.hpp"
#include "brw/ise.hpp"
#include "brw/limit.hpp"

using namespace brw;

static void BM_TreeSummary(benchmark::State& state) {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(1, 0);
    std::uint64_t vertices = 0;
    for (auto _ : state) {
        auto s = sample_tree_summary(nu, f, rng, 100000000);
        benchmark::DoNotOptimize(s);
        vertices += s.total;
    }
    state.SetItemsProcessed(static_cast<int64_t>(vertices));
}
BENCHMARK(BM_TreeSummary);

static void BM_TotalProgeny(benchmark::State& state) {
    auto nu = poisson1_offspring();
    Rng rng = Rng::substream(2, 0);
    std::uint64_t vertices = 0;
    for (auto _ : state) {
        auto t = sample_total_progeny(nu, rng, 100000000);
        benchmark::DoNotOptimize(t);
        vertices += t.total;
    }
    state.SetItemsProcessed(static_cast<int64_t>(vertices));
}
BENCHMARK(BM_TotalProgeny);

static void BM_ConditionedSequence(benchmark::State& state) {
    auto nu = poisson1_offspring();
    Rng rng = Rng::substream(3, 0);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_conditioned_sequence(nu, n, rng));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConditionedSequence)->Arg(1000)->Arg(100000);

static void BM_ConditionedSequenceRejection(benchmark::State& state) {
    auto nu = geometric_half_offspring();
    Rng rng = Rng::substream(4, 0);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_conditioned_sequence(nu, n, rng));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConditionedSequenceRejection)->Arg(1000)->Arg(10000);

static void BM_IseDensitySample(benchmark::State& state) {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(5, 0);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ise_density_sample(nu, f, n, 0.05, rng));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IseDensitySample)->Arg(10000)->Arg(100000);

static void BM_EnsembleEval(benchmark::State& state) {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    const std::uint64_t n = 200;
    std::vector<OccupationMeasure> trees;
    std::uint64_t stream = 0;
    while (trees.size() < n) {
        Rng rng = Rng::substream(6, stream++);
        try {
            trees.push_back(sample_tree_occupation(nu, f, rng, 10000000));
        } catch (const VertexCapExceeded&) {
        }
    }
    auto ens = build_ensemble(std::move(trees), n);
    for (auto _ : state) benchmark::DoNotOptimize(ens.eval_density(1.0));
}
BENCHMARK(BM_EnsembleEval);

BENCHMARK_MAIN();
