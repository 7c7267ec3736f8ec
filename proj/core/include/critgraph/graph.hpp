#ifndef CRITGRAPH_GRAPH_HPP
#define CRITGRAPH_GRAPH_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "critgraph/vertex_set.hpp"

namespace critgraph {

// Simple undirected graph on at most 64 vertices, one adjacency word per
// vertex.  Invariants kept by construction: adjacency is symmetric,
// irreflexive, and every set bit is < order().  Instances are cheap values;
// a const Graph is safe to share across threads.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::all(n_); }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // true iff every vertex of a is adjacent to every vertex of b (disjointness
    // required by the caller); anticomplete is the all-nonadjacent counterpart
    bool complete_between(VertexSet a, VertexSet b) const;
    bool anticomplete_between(VertexSet a, VertexSet b) const;
    // neighbors of any member of s, excluding s itself
    VertexSet neighborhood_of(VertexSet s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// G[s], vertices relabeled by increasing original index
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
// new vertex gets index g.order() and exactly nbrs as its neighborhood
Graph add_vertex(const Graph& g, VertexSet nbrs);
Graph remove_vertex(const Graph& g, int v);
Graph permuted(const Graph& g, const std::vector<int>& perm); // vertex v -> perm[v]

// maximal connected sets, ordered by smallest member
std::vector<VertexSet> components(const Graph& g);
// components of G[s], reported in g's vertex labels
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

} // namespace critgraph

#endif
