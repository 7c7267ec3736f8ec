#include "critgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace critgraph {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range 0..64");
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += adj_[v].count();
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("bad edge endpoints");
    adj_[u].add(v);
    adj_[v].add(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].remove(v);
    adj_[v].remove(u);
}

bool Graph::complete_between(VertexSet a, VertexSet b) const {
    for (int v : a)
        if (!b.is_subset_of(adj_[v])) return false;
    return true;
}

bool Graph::anticomplete_between(VertexSet a, VertexSet b) const {
    for (int v : a)
        if (adj_[v].intersects(b)) return false;
    return true;
}

VertexSet Graph::neighborhood_of(VertexSet s) const {
    VertexSet nb;
    for (int v : s) nb |= adj_[v];
    return nb - s;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("subset outside vertex range");
    int relabel[Graph::kMaxVertices];
    int m = 0;
    for (int v : s) relabel[v] = m++;
    Graph h(m);
    for (int v : s)
        for (int u : g.neighbors(v) & s)
            if (u > v) h.add_edge(relabel[v], relabel[u]);
    return h;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int v = 0; v < n; ++v)
        for (int u : (g.vertices() - g.neighbors(v)))
            if (u > v) h.add_edge(v, u);
    return h;
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    int n = g.order();
    if (n >= Graph::kMaxVertices) throw std::invalid_argument("vertex capacity exceeded");
    if (!nbrs.is_subset_of(g.vertices())) throw std::invalid_argument("neighborhood outside vertex range");
    Graph h(n + 1);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) h.add_edge(v, u);
    for (int u : nbrs) h.add_edge(n, u);
    return h;
}

Graph remove_vertex(const Graph& g, int v) {
    return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    assert(static_cast<int>(perm.size()) == n);
    Graph h(n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) h.add_edge(perm[v], perm[u]);
    return h;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    VertexSet todo = s;
    while (!todo.empty()) {
        VertexSet comp = VertexSet::single(todo.first());
        for (;;) {
            VertexSet grown = comp;
            for (int v : comp) grown |= g.neighbors(v) & s;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        todo -= comp;
    }
    // already ordered by smallest member: todo is scanned from its low bit
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

} // namespace critgraph
