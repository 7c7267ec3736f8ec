#ifndef CRITGRAPH_COLORING_HPP
#define CRITGRAPH_COLORING_HPP

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Proper coloring: colors[v] in 0..k-1, adjacent vertices distinct.
struct Coloring {
    std::vector<int> colors;
};

// Backtracking with DSATUR vertex selection; one maximum clique is pre-colored
// to break color symmetry and new color indices are introduced in order.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

// least k admitting a proper k-coloring; ascends from the clique bound
int chromatic_number(const Graph& g);

// max-clique branch and bound over adjacency words with a greedy coloring bound
int clique_number(const Graph& g);
VertexSet max_clique(const Graph& g);

int chromatic_of_subset(const Graph& g, VertexSet s);

} // namespace critgraph

#endif
