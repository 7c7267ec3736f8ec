#ifndef CRITGRAPH_CRITICALITY_HPP
#define CRITGRAPH_CRITICALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// chi(g) = k and every single-vertex deletion is (k-1)-colorable
bool is_k_vertex_critical(const Graph& g, int k);
// chi(g) = k and every single vertex or edge deletion drops chi below k;
// single deletions suffice for finite graphs since chi is monotone under
// deletion sequences
bool is_k_critical(const Graph& g, int k);

// A clique whose removal disconnects g, smallest found first.
// Requires connected input (throws std::invalid_argument otherwise).
std::optional<VertexSet> find_clique_cutset(const Graph& g);

// nonadjacent u < v with N(u) and N(v) nested
std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g);

// Nonempty disjoint anticomplete pair with chi(G[X]) <= chi(G[Y]) and Y
// complete to N(X); no k-vertex-critical graph has one.
struct XYObstruction {
    VertexSet x, y;
};

// Tests X,Y drawn from unions of components of each homogeneous set first,
// then all subset pairs with |X|,|Y| <= size_bound.
std::optional<XYObstruction> find_xy_obstruction(const Graph& g, int size_bound);

// Proper homogeneous sets with 2 <= |S| < n: closures of seed pairs under
// mixed vertices, overlapping closures merged while the union stays proper
// (the union of overlapping homogeneous sets is homogeneous), then filtered
// to inclusion-maximal members.  Every returned set is homogeneous and
// maximal within the family; on dense graphs with many crossing maximal
// modules (e.g. complete graphs) the family need not list all of them.
std::vector<VertexSet> find_homogeneous_sets(const Graph& g);

// For 5-vertex-critical P5-free g, each component A of a homogeneous set must
// be K1, K2, K3 or C5 according to chi(A); hypotheses are checked and the
// report is marked not applicable when they fail.
struct Lemma6Report {
    bool applicable = false;
    std::string gate_reason;
    struct Violation {
        VertexSet component;
        int chi;
    };
    std::vector<Violation> violations;
};
Lemma6Report check_lemma6(const Graph& g);

} // namespace critgraph

#endif
