#include "critgraph/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/criticality.hpp"

namespace critgraph {

namespace {

struct GenHooks {
    int n_max;
    // hereditary child filter; last added vertex has index child.order()-1
    std::function<bool(const Graph& child, int last)> keep;
    std::function<void(const Graph&, const std::string& key)> visit;
    const std::atomic<bool>* cancel = nullptr;
    long long nodes = 0;

    bool cancelled() const { return cancel && cancel->load(std::memory_order_relaxed); }
};

// children of g in deterministic neighborhood-mask order; calls child_fn on
// every child that survives the filter, the sibling dedup and the parent test
template <typename F>
void for_each_child(GenHooks& hooks, const Graph& g, const std::string& key, F&& child_fn) {
    const int m = g.order();
    std::unordered_set<std::string> seen;
    const std::uint64_t limit = 1ULL << m;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (hooks.cancelled()) return;
        Graph child = add_vertex(g, VertexSet(mask));
        if (hooks.keep && !hooks.keep(child, m)) continue;
        CanonicalForm cf = canonical_form_full(child);
        if (!seen.insert(cf.key.bytes).second) continue;
        int canon_last = -1;
        for (int v = 0; v <= m; ++v)
            if (cf.labeling[v] == m) {
                canon_last = v;
                break;
            }
        if (canon_last != m &&
            canonical_form(remove_vertex(child, canon_last)).bytes != key)
            continue;
        child_fn(child, cf.key.bytes);
    }
}

void expand(GenHooks& hooks, const Graph& g, const std::string& key) {
    ++hooks.nodes;
    hooks.visit(g, key);
    if (g.order() >= hooks.n_max || hooks.cancelled()) return;
    for_each_child(hooks, g, key,
                   [&](const Graph& child, const std::string& child_key) {
                       expand(hooks, child, child_key);
                   });
}

struct Root {
    Graph graph;
    std::string key;
};

} // namespace

EnumResult enumerate_critical(const EnumSpec& spec, const EnumCallbacks& cb,
                              const std::atomic<bool>* cancel) {
    if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
    if (spec.n_max < 1 || spec.n_max > Graph::kMaxVertices)
        throw std::invalid_argument("n_max out of range");
    if (spec.shard_modulus < 1 || spec.shard_residue < 0 ||
        spec.shard_residue >= spec.shard_modulus)
        throw std::invalid_argument("bad shard split");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> pats;
    for (const auto& p : spec.forbidden) pats.push_back(build_pattern(p));

    auto keep = [&](const Graph& child, int last) {
        if (spec.prune.forbidden_patterns)
            for (const Graph& pat : pats)
                if (contains_induced_using(child, pat, last)) return false;
        if (spec.prune.colorability && !is_k_colorable(child, spec.k)) return false;
        return true;
    };

    auto accept = [&](const Graph& g) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) < spec.k - 1) return false;
        if (!is_connected(g)) return false;
        if (find_comparable_pair(g)) return false;
        if (!is_free(g, spec.forbidden)) return false;
        if (find_clique_cutset(g)) return false;
        return is_k_vertex_critical(g, spec.k);
    };

    using Bucket = std::vector<std::pair<int, std::string>>; // (order, record)

    EnumResult result;
    Bucket shallow;
    std::vector<Root> roots;
    long long shallow_nodes = 0;

    // orders 1..2 are shared across shards; residue 0 owns their outputs.
    // depth-2 nodes (order 3) seed the sharded branches.
    {
        GenHooks hooks;
        hooks.n_max = std::min(spec.n_max, 3);
        hooks.keep = keep;
        hooks.cancel = cancel;
        hooks.visit = [&](const Graph& g, const std::string& key) {
            if (g.order() == 3 && spec.n_max >= 3) {
                roots.push_back({g, key});
                return;
            }
            if (spec.shard_residue == 0 && accept(g)) shallow.emplace_back(g.order(), key);
        };
        Graph k1(1);
        if (!keep(k1, 0)) {
            // even the one-vertex graph is filtered out; nothing to do
            result.wall_seconds = std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
            return result;
        }
        expand(hooks, k1, canonical_form(k1).bytes);
        // branch roots are counted when their branch is explored
        shallow_nodes = hooks.nodes - static_cast<long long>(roots.size());
    }

    std::vector<size_t> assigned;
    for (size_t i = 0; i < roots.size(); ++i)
        if (static_cast<int>(i % static_cast<size_t>(spec.shard_modulus)) == spec.shard_residue)
            assigned.push_back(i);

    std::vector<Bucket> buckets(assigned.size());
    std::vector<long long> node_counts(assigned.size(), 0);
    std::atomic<size_t> next{0};
    std::atomic<int> done{0};
    std::atomic<long long> nodes_total{shallow_nodes};
    std::mutex progress_mu;

    auto run_branch = [&](size_t slot) {
        const Root& root = roots[assigned[slot]];
        GenHooks hooks;
        hooks.n_max = spec.n_max;
        hooks.keep = keep;
        hooks.cancel = cancel;
        hooks.visit = [&](const Graph& g, const std::string& key) {
            if (accept(g)) buckets[slot].emplace_back(g.order(), key);
        };
        expand(hooks, root.graph, root.key);
        node_counts[slot] = hooks.nodes;
        nodes_total.fetch_add(hooks.nodes, std::memory_order_relaxed);
        int finished = done.fetch_add(1) + 1;
        if (cb.progress) {
            std::lock_guard<std::mutex> lock(progress_mu);
            cb.progress(finished, static_cast<int>(assigned.size()),
                        nodes_total.load(std::memory_order_relaxed));
        }
    };

    int workers = std::clamp(spec.threads, 1, static_cast<int>(assigned.size()) + 1);
    if (workers <= 1) {
        for (size_t i = 0; i < assigned.size(); ++i) run_branch(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= assigned.size()) return;
                    run_branch(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    Bucket merged = std::move(shallow);
    for (auto& b : buckets)
        merged.insert(merged.end(), std::make_move_iterator(b.begin()),
                      std::make_move_iterator(b.end()));
    std::sort(merged.begin(), merged.end());

    result.nodes_explored = nodes_total.load();
    result.complete = !(cancel && cancel->load());
    for (auto& [order, rec] : merged) {
        ++result.counts_per_order[order];
        if (cb.emit) cb.emit(rec);
        result.graphs.push_back(std::move(rec));
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

long enumerate_all_graphs(int n, const std::function<void(const Graph&)>& sink) {
    if (n < 1 || n > 9) throw std::invalid_argument("order must be in 1..9");
    long count = 0;
    enumerate_classes(n, nullptr, [&](const Graph& g) {
        if (g.order() == n) {
            ++count;
            if (sink) sink(g);
        }
    });
    return count;
}

void enumerate_classes(int n_max, const std::function<bool(const Graph&, int)>& keep,
                       const std::function<void(const Graph&)>& visit) {
    if (n_max < 1 || n_max > Graph::kMaxVertices)
        throw std::invalid_argument("n_max out of range");
    GenHooks hooks;
    hooks.n_max = n_max;
    hooks.keep = keep;
    hooks.visit = [&](const Graph& g, const std::string&) { visit(g); };
    Graph k1(1);
    if (keep && !keep(k1, 0)) return;
    expand(hooks, k1, canonical_form(k1).bytes);
}

} // namespace critgraph
