#ifndef CRITGRAPH_CANONICAL_HPP
#define CRITGRAPH_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Labeling-invariant representative: equal keys iff the graphs are isomorphic.
// bytes is the graph6 record of the canonical relabeling, so keys double as
// output records and sort by (order, adjacency string).
struct CanonicalKey {
    std::string bytes;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
    CanonicalKey key;
    std::vector<int> labeling; // vertex v -> canonical position
};

// Canonical form = lexicographically least upper-triangle adjacency string
// over all vertex orderings consistent with the iterated degree-refinement
// partition (cells ordered by refinement signature).  Search individualizes
// one vertex of the first non-singleton cell at a time, re-refines, and skips
// candidates that are twins of an already-tried one.
CanonicalForm canonical_form_full(const Graph& g);
CanonicalKey canonical_form(const Graph& g);

// Independent backtracking bijection search; agrees with canonical_form
// equality (cross-checked in the test suite).
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace critgraph

#endif
