#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/catalog.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/c5_structure.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/patterns.hpp"

using namespace critgraph;

namespace {

std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(p);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (flip(rng)) g.add_edge(u, v);
        out.push_back(g);
    }
    return out;
}

void BM_CanonicalForm(benchmark::State& state) {
    auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.5, 64, 7);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10)->Arg(12);

void BM_ChromaticNumber(benchmark::State& state) {
    Graph g = catalog_graph("F8");
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber);

void BM_VertexCritical(benchmark::State& state) {
    Graph g = catalog_graph("F8");
    for (auto _ : state) benchmark::DoNotOptimize(is_k_vertex_critical(g, 5));
}
BENCHMARK(BM_VertexCritical);

void BM_ContainsInducedP5(benchmark::State& state) {
    auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 64, 11);
    Graph p5 = build_pattern(PatternName::path(5));
    size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_induced(graphs[i++ % graphs.size()], p5));
}
BENCHMARK(BM_ContainsInducedP5)->Arg(10)->Arg(14);

void BM_PartitionAndProperties(benchmark::State& state) {
    std::vector<PatternName> free = {PatternName::path(5), PatternName::bull()};
    Graph g;
    std::array<int, 5> cyc{};
    for (std::uint64_t seed = 1;; ++seed) {
        g = random_free_graph(12, 0.35, seed, free);
        if (auto c = find_induced_c5(g)) {
            cyc = *c;
            break;
        }
    }
    for (auto _ : state) {
        C5Partition part = partition_around_c5(g, cyc);
        benchmark::DoNotOptimize(check_neighborhood_properties(g, part));
    }
}
BENCHMARK(BM_PartitionAndProperties);

void BM_EnumerateSmall(benchmark::State& state) {
    EnumSpec spec;
    spec.k = 4;
    spec.forbidden = {PatternName::path(5)};
    spec.n_max = 6;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_critical(spec).graphs.size());
}
BENCHMARK(BM_EnumerateSmall);

} // namespace

BENCHMARK_MAIN();
