// Throughput of the main building blocks on generated instances. The
// argument is the target edge count.

#include "sround/bipartite.hpp"
#include "sround/generator.hpp"
#include "sround/grid.hpp"
#include "sround/harness.hpp"
#include "sround/lifting.hpp"
#include "sround/oct.hpp"
#include "sround/vc_approx.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace sround;

namespace {

const GridPoint point{10, 0.1, 0.005, 0.05, 0.01, 1.5, 1.5};

const GeneratedInstance& instance(std::size_t m) {
    static std::map<std::size_t, GeneratedInstance> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, generate(point.params(m, 42))).first;
    return it->second;
}

struct BipartitePart {
    SubgraphView view;
    VertexSet left, right;
};

BipartitePart bipartite_part(const GeneratedInstance& inst) {
    const OctDecomposition& d = inst.prescribed;
    SubgraphView view = induced_subgraph(inst.graph, set_union(d.left, d.right));
    VertexSet left = view.to_local(d.left), right = view.to_local(d.right);
    return {std::move(view), std::move(left), std::move(right)};
}

void set_edges(benchmark::State& state, const Graph& g) {
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.num_edges()));
}

void BM_Generate(benchmark::State& state) {
    const GeneratorParams p = point.params(static_cast<std::size_t>(state.range(0)), 1);
    std::size_t m = 0;
    for (auto _ : state) {
        const GeneratedInstance inst = generate(p);
        m = inst.graph.num_edges();
        benchmark::DoNotOptimize(m);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m));
}

void BM_StandardTwoApprox(benchmark::State& state) {
    const Graph& g = instance(static_cast<std::size_t>(state.range(0))).graph;
    const auto rule = static_cast<EdgeSelectionRule>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(standard_two_approx(g, rule, 1).cover.size());
    set_edges(state, g);
}

void BM_DfsTwoApprox(benchmark::State& state) {
    const Graph& g = instance(static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(dfs_two_approx(g, 1).cover.size());
    set_edges(state, g);
}

void BM_MisOct(benchmark::State& state) {
    const Graph& g = instance(static_cast<std::size_t>(state.range(0))).graph;
    const auto rule = static_cast<MisRule>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mis_oct(g, rule, 1).oct.size());
    set_edges(state, g);
}

void BM_HopcroftKarp(benchmark::State& state) {
    const BipartitePart b = bipartite_part(instance(static_cast<std::size_t>(state.range(0))));
    const Graph& g = b.view.graph();
    for (auto _ : state) benchmark::DoNotOptimize(min_vc_bipartite(g, b.left, b.right, 1).cover.size());
    set_edges(state, g);
}

void BM_Lift(benchmark::State& state) {
    const GeneratedInstance& inst = instance(static_cast<std::size_t>(state.range(0)));
    const BipartitePart b = bipartite_part(inst);
    const VertexSet solution = b.view.to_parent(min_vc_bipartite(b.view.graph(), b.left, b.right, 1).cover);
    const LiftContext ctx(inst.graph, inst.prescribed.oct, solution);
    const auto strategy = static_cast<LiftStrategy>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_lift(strategy, ctx).lift.size());
    set_edges(state, inst.graph);
}

void BM_Pipeline(benchmark::State& state) {
    const Graph& g = instance(static_cast<std::size_t>(state.range(0))).graph;
    PipelineConfig cfg;
    cfg.record_timings = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, std::nullopt, cfg).oct_size);
    set_edges(state, g);
}

} // namespace

BENCHMARK(BM_Generate)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardTwoApprox)
    ->ArgsProduct({{100000, 1000000},
                   {static_cast<int>(EdgeSelectionRule::HighDegree), static_cast<int>(EdgeSelectionRule::LowDegree),
                    static_cast<int>(EdgeSelectionRule::Random)}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DfsTwoApprox)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MisOct)
    ->ArgsProduct({{100000, 1000000},
                   {static_cast<int>(MisRule::Resort), static_cast<int>(MisRule::NoResort),
                    static_cast<int>(MisRule::Random)}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HopcroftKarp)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lift)
    ->ArgsProduct({{100000},
                   {static_cast<int>(LiftStrategy::Naive), static_cast<int>(LiftStrategy::Greedy),
                    static_cast<int>(LiftStrategy::Apx), static_cast<int>(LiftStrategy::OctFirst),
                    static_cast<int>(LiftStrategy::BipFirst), static_cast<int>(LiftStrategy::Recursive)}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
