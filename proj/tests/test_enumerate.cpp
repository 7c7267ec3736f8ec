#include <doctest.h>

#include <algorithm>
#include <set>

#include "critgraph/canonical.hpp"
#include "critgraph/catalog.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/patterns.hpp"
#include "critgraph/reference.hpp"

using namespace critgraph;

namespace {

std::vector<Graph> all_labeled(int n) {
    std::vector<Graph> out;
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ULL << pairs); ++bits) {
        Graph g(n);
        int b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if ((bits >> b) & 1) g.add_edge(i, j);
        out.push_back(g);
    }
    return out;
}

// direct criticality via the naive reference, plus naive pattern freedom
bool brute_is_target(const Graph& g, int k, const std::vector<Graph>& pats) {
    for (const Graph& h : pats) {
        const int hn = h.order();
        for (std::uint64_t s = 0; s < (1ULL << g.order()); ++s) {
            VertexSet set(s);
            if (set.count() != hn) continue;
            if (naive_isomorphic(induced_subgraph(g, set), h)) return false;
        }
    }
    if (naive_chromatic_number(g) != k) return false;
    for (int v = 0; v < g.order(); ++v)
        if (naive_chromatic_number(remove_vertex(g, v)) > k - 1) return false;
    return true;
}

EnumSpec spec_of(int k, std::vector<PatternName> forbidden, int n_max) {
    EnumSpec s;
    s.k = k;
    s.forbidden = std::move(forbidden);
    s.n_max = n_max;
    return s;
}

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("class counts for orders 1..7") {
    const long want[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_all_graphs(n, nullptr) == want[n - 1]);
    CHECK_THROWS_AS(enumerate_all_graphs(10, nullptr), std::invalid_argument);
}

TEST_CASE("order-4 count cross-checked by all-permutations filtering") {
    std::vector<Graph> reps;
    for (const Graph& g : all_labeled(4)) {
        bool known = false;
        for (const Graph& r : reps)
            if (naive_isomorphic(g, r)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(g);
    }
    CHECK(reps.size() == 11);
}

TEST_CASE("each visited class appears exactly once") {
    std::set<std::string> keys;
    long total = 0;
    for (int n = 1; n <= 6; ++n)
        total += enumerate_all_graphs(n, [&](const Graph& g) {
            CHECK(keys.insert(canonical_form(g).bytes).second);
        });
    CHECK(total == 1 + 2 + 4 + 11 + 34 + 156);
    CHECK(static_cast<long>(keys.size()) == total);
}

TEST_CASE("4-critical P5-free up to order 6 is K4 and the 5-wheel") {
    EnumResult res = enumerate_critical(spec_of(4, {PatternName::path(5)}, 6));
    REQUIRE(res.graphs.size() == 2);
    CHECK(res.graphs[0] == canonical_form(build_pattern(PatternName::complete(4))).bytes);
    CHECK(res.graphs[1] == canonical_form(catalog_graph("W5")).bytes);
    CHECK(res.complete);
    CHECK(res.counts_per_order.at(4) == 1);
    CHECK(res.counts_per_order.at(6) == 1);
}

TEST_CASE("5-critical (P5,bull)-free at order 5 is K5") {
    EnumResult res =
        enumerate_critical(spec_of(5, {PatternName::path(5), PatternName::bull()}, 5));
    REQUIRE(res.graphs.size() == 1);
    CHECK(res.graphs[0] == canonical_form(build_pattern(PatternName::complete(5))).bytes);
}

TEST_CASE("5-critical (P5,bull)-free at order 7 includes the F1 configuration") {
    EnumResult res =
        enumerate_critical(spec_of(5, {PatternName::path(5), PatternName::bull()}, 7));
    std::string f1 = canonical_form(catalog_graph("F1")).bytes;
    CHECK(std::find(res.graphs.begin(), res.graphs.end(), f1) != res.graphs.end());
}

TEST_CASE("oracle equivalence at n_max = 6") {
    EnumResult res = enumerate_critical(spec_of(4, {PatternName::path(5)}, 6));
    std::set<std::string> got(res.graphs.begin(), res.graphs.end());
    std::set<std::string> want;
    std::vector<Graph> pats = {build_pattern(PatternName::path(5))};
    for (int n = 1; n <= 6; ++n)
        enumerate_all_graphs(n, [&](const Graph& g) {
            if (brute_is_target(g, 4, pats)) want.insert(canonical_form(g).bytes);
        });
    CHECK(got == want);
}

TEST_CASE("emitted graphs pass the structural criticality invariants") {
    for (auto spec : {spec_of(4, {PatternName::path(5)}, 7),
                      spec_of(5, {PatternName::path(5), PatternName::bull()}, 7)}) {
        EnumResult res = enumerate_critical(spec);
        for (const std::string& rec : res.graphs) {
            Graph g = from_graph6(rec);
            CAPTURE(rec);
            CHECK(is_connected(g));
            for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= spec.k - 1);
            CHECK_FALSE(find_comparable_pair(g));
            CHECK_FALSE(find_clique_cutset(g));
            CHECK_FALSE(find_xy_obstruction(g, 4));
            CHECK(is_free(g, spec.forbidden));
            CHECK(is_k_vertex_critical(g, spec.k));
        }
    }
}

TEST_CASE("shard union equals the unsharded run") {
    EnumSpec base = spec_of(4, {PatternName::path(5)}, 7);
    EnumResult whole = enumerate_critical(base);
    std::vector<std::string> merged;
    long long union_nodes = 0;
    for (int r = 0; r < 3; ++r) {
        EnumSpec shard = base;
        shard.shard_residue = r;
        shard.shard_modulus = 3;
        EnumResult part = enumerate_critical(shard);
        union_nodes += part.nodes_explored;
        merged.insert(merged.end(), part.graphs.begin(), part.graphs.end());
    }
    std::sort(merged.begin(), merged.end(),
              [](const std::string& a, const std::string& b) {
                  return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
              });
    std::vector<std::string> whole_sorted = whole.graphs;
    std::sort(whole_sorted.begin(), whole_sorted.end(),
              [](const std::string& a, const std::string& b) {
                  return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
              });
    CHECK(merged == whole_sorted);
    std::set<std::string> dedup(merged.begin(), merged.end());
    CHECK(dedup.size() == merged.size()); // zero duplicates across shards
}

TEST_CASE("prune flags change speed, not results") {
    EnumSpec base = spec_of(4, {PatternName::path(5)}, 6);
    EnumResult pruned = enumerate_critical(base);
    EnumSpec open = base;
    open.prune.forbidden_patterns = false;
    EnumResult wide = enumerate_critical(open);
    CHECK(pruned.graphs == wide.graphs);
    EnumSpec open2 = base;
    open2.prune.colorability = false;
    CHECK(enumerate_critical(open2).graphs == pruned.graphs);
}

TEST_CASE("threaded runs are byte-identical") {
    EnumSpec base = spec_of(5, {PatternName::path(5), PatternName::bull()}, 7);
    EnumResult seq = enumerate_critical(base);
    EnumSpec par = base;
    par.threads = 2;
    EnumResult thr = enumerate_critical(par);
    CHECK(seq.graphs == thr.graphs);
    CHECK(enumerate_critical(base).graphs == seq.graphs); // run-to-run determinism
}

TEST_CASE("outputs arrive sorted by order then record") {
    EnumResult res = enumerate_critical(spec_of(4, {PatternName::path(5)}, 7));
    for (size_t i = 1; i < res.graphs.size(); ++i) {
        Graph a = from_graph6(res.graphs[i - 1]);
        Graph b = from_graph6(res.graphs[i]);
        CHECK(std::make_pair(a.order(), res.graphs[i - 1]) <
              std::make_pair(b.order(), res.graphs[i]));
    }
}

} // TEST_SUITE
