#ifndef CRITGRAPH_CATALOG_HPP
#define CRITGRAPH_CATALOG_HPP

#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Named fixtures: K5 and F1..F9 (the 5-vertex-critical family used as
// forbidden subgraphs), plus bull, C5 and W5 as auxiliary fixtures.
struct CatalogEntry {
    std::string name;
    Graph graph;
    int expected_order;
    bool five_vertex_critical;
};

const std::vector<CatalogEntry>& catalog_entries();
Graph catalog_graph(const std::string& name); // throws std::invalid_argument

// K5, F1..F9 in order; containment of any member as a (not necessarily
// induced) subgraph is the hypothesis the claim registry calls "no-F"
const std::vector<Graph>& f_family();

struct CatalogVerification {
    struct Entry {
        std::string name;
        bool order_ok;
        bool criticality_ok;      // is_k_vertex_critical(g,5) matches expectation
        bool induced_c5_ok;       // F1..F9 contain an induced C5; K5 does not
    };
    std::vector<Entry> entries;
    bool all_ok = true;
};
CatalogVerification verify_catalog();

} // namespace critgraph

#endif
