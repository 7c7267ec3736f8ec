#include "critgraph/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace critgraph {

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    VertexSet best_set;

    void expand(VertexSet r, VertexSet p) {
        if (p.empty()) {
            if (r.count() > best) {
                best = r.count();
                best_set = r;
            }
            return;
        }
        // greedy color classes of p; class index bounds any clique inside p
        struct Item {
            int v, bound;
        };
        std::array<Item, Graph::kMaxVertices> items;
        int m = 0;
        VertexSet rest = p;
        int color = 0;
        while (!rest.empty()) {
            ++color;
            VertexSet avail = rest;
            while (!avail.empty()) {
                int v = avail.first();
                avail.remove(v);
                avail -= g.neighbors(v);
                rest.remove(v);
                items[m++] = {v, color};
            }
        }
        for (int i = m - 1; i >= 0; --i) {
            if (r.count() + items[i].bound <= best) return;
            int v = items[i].v;
            expand(r | VertexSet::single(v), p & g.neighbors(v));
            p.remove(v);
        }
    }
};

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> colors;           // -1 = unassigned
    std::vector<std::uint64_t> seen;   // per-vertex mask of neighbor colors
    int assigned = 0;
    int used = 0; // number of distinct colors currently in use (0..used-1)

    bool solve() {
        if (assigned == g.order()) return true;
        // DSATUR: most saturated, then highest degree, then lowest index
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (colors[v] >= 0) continue;
            int sat = std::popcount(seen[v]);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k, used + 1); // at most one brand-new color index
        for (int c = 0; c < limit; ++c) {
            if ((seen[pick] >> c) & 1) continue;
            assign(pick, c);
            int prev_used = used;
            used = std::max(used, c + 1);
            if (solve()) return true;
            used = prev_used;
            unassign(pick, c);
        }
        return false;
    }

    void assign(int v, int c) {
        colors[v] = c;
        ++assigned;
        for (int u : g.neighbors(v)) seen[u] |= 1ULL << c;
    }

    void unassign(int v, int c) {
        colors[v] = -1;
        --assigned;
        for (int u : g.neighbors(v)) {
            bool still = false;
            for (int w : g.neighbors(u))
                if (w != v && colors[w] == c) {
                    still = true;
                    break;
                }
            if (!still) seen[u] &= ~(1ULL << c);
        }
    }
};

} // namespace

VertexSet max_clique(const Graph& g) {
    if (g.order() == 0) return VertexSet();
    CliqueSearch s{g};
    s.expand(VertexSet(), g.vertices());
    return s.best_set;
}

int clique_number(const Graph& g) {
    return max_clique(g).count();
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const int n = g.order();
    if (n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        Coloring all;
        all.colors.resize(n);
        for (int v = 0; v < n; ++v) all.colors[v] = v;
        return all;
    }
    VertexSet clique = max_clique(g);
    if (clique.count() > k) return std::nullopt;

    ColorSearch s{g, k, std::vector<int>(n, -1), std::vector<std::uint64_t>(n, 0), 0, 0};
    int c = 0;
    for (int v : clique) {
        s.assign(v, c);
        ++c;
    }
    s.used = c;
    if (!s.solve()) return std::nullopt;
    return Coloring{std::move(s.colors)};
}

int chromatic_number(const Graph& g) {
    int lo = clique_number(g);
    for (int k = lo;; ++k)
        if (is_k_colorable(g, k)) return k;
}

int chromatic_of_subset(const Graph& g, VertexSet s) {
    return chromatic_number(induced_subgraph(g, s));
}

} // namespace critgraph
