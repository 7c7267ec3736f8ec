#include "critgraph/canonical.hpp"

#include <algorithm>
#include <array>

#include "critgraph/graph6.hpp"

namespace critgraph {

namespace {

// Ordered partition of the vertex set; cell order is part of the state.
using Partition = std::vector<VertexSet>;

// Split every cell by the per-vertex count vector |N(v) & cell_k|, sub-cells
// ordered by signature.  Cell indices stay canonical because signatures are
// computed against the previous (canonical) cell order.  Repeats to fixpoint.
void refine(const Graph& g, Partition& cells) {
    for (;;) {
        Partition next;
        next.reserve(cells.size());
        for (VertexSet cell : cells) {
            if (cell.count() <= 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (VertexSet other : cells) sig.push_back((g.neighbors(v) & other).count());
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            size_t i = 0;
            while (i < keyed.size()) {
                size_t j = i;
                VertexSet sub;
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    sub.add(keyed[j++].second);
                next.push_back(sub);
                i = j;
            }
        }
        bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable) return;
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::string best_body;       // packed upper-triangle bits, 6 per byte
    std::vector<int> best_order; // canonical position -> vertex
    bool have_best = false;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

    std::string body_for(const std::vector<int>& order) const {
        std::string out;
        int acc = 0, nbits = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
                if (++nbits == 6) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) out.push_back(static_cast<char>(acc << (6 - nbits)));
        return out;
    }

    // leading fully-determined columns allow pruning against the current best
    bool prefix_beats_best(const Partition& cells) const {
        if (!have_best) return false;
        int fixed = 0;
        std::array<int, Graph::kMaxVertices> order{};
        for (VertexSet c : cells) {
            if (c.count() != 1) break;
            order[fixed++] = c.first();
        }
        if (fixed < 2) return false;
        long bit = 0;
        for (int j = 1; j < fixed; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                int mine = g.adjacent(order[i], order[j]) ? 1 : 0;
                int theirs = (best_body[bit / 6] >> (5 - bit % 6)) & 1;
                if (mine != theirs) return mine > theirs;
            }
        }
        return false;
    }

    void descend(Partition cells) {
        refine(g, cells);
        if (prefix_beats_best(cells)) return;

        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].count() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            std::vector<int> order;
            order.reserve(n);
            for (VertexSet c : cells) order.push_back(c.first());
            std::string body = body_for(order);
            if (!have_best || body < best_body) {
                best_body = std::move(body);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }

        std::vector<int> tried;
        for (int v : cells[target]) {
            bool twin = false;
            for (int u : tried) {
                VertexSet pair = VertexSet::single(u) | VertexSet::single(v);
                if ((g.neighbors(u) - pair) == (g.neighbors(v) - pair)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (int i = 0; i < target; ++i) child.push_back(cells[i]);
            child.push_back(VertexSet::single(v));
            child.push_back(cells[target] - VertexSet::single(v));
            for (size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            descend(std::move(child));
        }
    }
};

} // namespace

CanonicalForm canonical_form_full(const Graph& g) {
    const int n = g.order();
    CanonicalForm out;
    out.labeling.assign(n, 0);
    if (n == 0) {
        out.key.bytes = to_graph6(g);
        return out;
    }
    Searcher s(g);
    s.descend(Partition{g.vertices()});
    for (int pos = 0; pos < n; ++pos) out.labeling[s.best_order[pos]] = pos;
    out.key.bytes = to_graph6(permuted(g, out.labeling));
    return out;
}

CanonicalKey canonical_form(const Graph& g) {
    return canonical_form_full(g).key;
}

namespace {

// degree profile: (deg(v), sorted multiset of neighbor degrees)
std::vector<std::pair<int, std::vector<int>>> degree_profile(const Graph& g) {
    std::vector<std::pair<int, std::vector<int>>> prof(g.order());
    for (int v = 0; v < g.order(); ++v) {
        prof[v].first = g.degree(v);
        for (int u : g.neighbors(v)) prof[v].second.push_back(g.degree(u));
        std::sort(prof[v].second.begin(), prof[v].second.end());
    }
    return prof;
}

bool extend_bijection(const Graph& a, const Graph& b, std::vector<int>& map,
                      VertexSet used, int next) {
    const int n = a.order();
    if (next == n) return true;
    for (int cand : b.vertices() - used) {
        if (b.degree(cand) != a.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (a.adjacent(prev, next) != b.adjacent(map[prev], cand)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        if (extend_bijection(a, b, map, used | VertexSet::single(cand), next + 1)) return true;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    auto pa = degree_profile(a), pb = degree_profile(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(a.order());
    return extend_bijection(a, b, map, VertexSet(), 0);
}

} // namespace critgraph
