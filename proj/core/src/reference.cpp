#include "critgraph/reference.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace critgraph {

namespace {

bool color_rec(const Graph& g, std::vector<int>& colors, int v, int k) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && colors[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        if (color_rec(g, colors, v + 1, k)) return true;
    }
    return false;
}

} // namespace

bool naive_k_colorable(const Graph& g, int k) {
    if (g.order() == 0) return true;
    if (k <= 0) return false;
    std::vector<int> colors(static_cast<size_t>(g.order()), -1);
    return color_rec(g, colors, 0, k);
}

int naive_chromatic_number(const Graph& g) {
    for (int k = 0;; ++k)
        if (naive_k_colorable(g, k)) return k;
}

int naive_clique_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        VertexSet set(s);
        if (set.count() <= best) continue;
        bool clique = true;
        for (int v : set)
            if ((g.neighbors(v) & set) != (set - VertexSet::single(v))) {
                clique = false;
                break;
            }
        if (clique) best = set.count();
    }
    return best;
}

bool naive_perfect(const Graph& g) {
    const int n = g.order();
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        Graph h = induced_subgraph(g, VertexSet(s));
        if (naive_chromatic_number(h) != naive_clique_number(h)) return false;
    }
    return true;
}

bool naive_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (permuted(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace critgraph
