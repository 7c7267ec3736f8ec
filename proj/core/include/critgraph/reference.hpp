#ifndef CRITGRAPH_REFERENCE_HPP
#define CRITGRAPH_REFERENCE_HPP

#include "critgraph/graph.hpp"

namespace critgraph {

// Deliberately naive reference algorithms, kept independent of the optimized
// paths so the two can be checked against each other.  Exponential; meant for
// n <= 7 or so.

// plain color-assignment backtracking in vertex order, no ordering heuristics
bool naive_k_colorable(const Graph& g, int k);
int naive_chromatic_number(const Graph& g);

// scan all vertex subsets for the largest clique
int naive_clique_number(const Graph& g);

// chi == omega on every induced subgraph
bool naive_perfect(const Graph& g);

// try all order()! bijections
bool naive_isomorphic(const Graph& a, const Graph& b);

} // namespace critgraph

#endif
