#include "critgraph/catalog.hpp"

#include <stdexcept>

#include "critgraph/criticality.hpp"
#include "critgraph/c5_structure.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

namespace {

// All F graphs share the rim cycle 0-1-2-3-4-0; extra vertices are appended
// with their rim attachments, then the extra edges among them.
Graph rim_plus(int extra, const std::vector<VertexSet>& rim_nbrs,
               std::initializer_list<std::pair<int, int>> extra_edges) {
    Graph g(5 + extra);
    for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
    for (int i = 0; i < extra; ++i)
        for (int u : rim_nbrs[static_cast<size_t>(i)]) g.add_edge(5 + i, u);
    for (auto [a, b] : extra_edges) g.add_edge(a, b);
    return g;
}

constexpr VertexSet rim_all{0x1f};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, Graph g, int order, bool critical) {
        out.push_back({std::move(name), std::move(g), order, critical});
    };

    add("K5", build_pattern(PatternName::complete(5)), 5, true);
    // two adjacent vertices complete to the rim
    add("F1", rim_plus(2, {rim_all, rim_all}, {{5, 6}}), 7, true);
    // a full vertex plus one vertex missing v4 and one missing v3, both tied to it
    add("F2", rim_plus(3, {rim_all, VertexSet{0b10111}, VertexSet{0b11011}},
                       {{5, 6}, {5, 7}}),
        8, true);
    // two full vertices, the missing-v4 and missing-v3 vertices each tied to one
    add("F3", rim_plus(4, {rim_all, rim_all, VertexSet{0b10111}, VertexSet{0b11011}},
                       {{7, 5}, {8, 6}}),
        9, true);
    // like F2 with the four-neighbor vertices missing v2 and v5 instead
    add("F4", rim_plus(3, {rim_all, VertexSet{0b11101}, VertexSet{0b01111}},
                       {{5, 6}, {5, 7}}),
        8, true);
    add("F5", rim_plus(4, {rim_all, rim_all, VertexSet{0b11101}, VertexSet{0b01111}},
                       {{7, 5}, {8, 6}}),
        9, true);
    // two full vertices and an adjacent pair each seeing {v1,v2,v5}
    add("F6", rim_plus(4, {rim_all, rim_all, VertexSet{0b10011}, VertexSet{0b10011}},
                       {{7, 5}, {8, 6}, {7, 8}}),
        9, true);
    // two full vertices plus consecutive-triple vertices at {v1,v2,v3} and {v1,v4,v5}
    add("F7", rim_plus(4, {rim_all, rim_all, VertexSet{0b00111}, VertexSet{0b11001}},
                       {{7, 5}, {8, 6}}),
        9, true);
    // two full vertices plus an adjacent pair at {v2,v3,v4} and {v3,v4,v5}
    add("F8", rim_plus(4, {rim_all, rim_all, VertexSet{0b01110}, VertexSet{0b11100}},
                       {{7, 5}, {8, 6}, {7, 8}}),
        9, true);
    // an adjacent pair complete to {v1,v2,v3} and another complete to {v1,v4,v5}
    add("F9", rim_plus(4, {VertexSet{0b00111}, VertexSet{0b00111}, VertexSet{0b11001}, VertexSet{0b11001}},
                       {{5, 6}, {7, 8}}),
        9, true);

    add("bull", build_pattern(PatternName::bull()), 5, false);
    add("C5", build_pattern(PatternName::cycle(5)), 5, false);
    // 4-vertex-critical P5-free fixture
    add("W5", rim_plus(1, {rim_all}, {}), 6, false);
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

Graph catalog_graph(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e.graph;
    throw std::invalid_argument("unknown catalog name: " + name);
}

const std::vector<Graph>& f_family() {
    static const std::vector<Graph> family = [] {
        std::vector<Graph> out;
        for (const auto& e : catalog_entries())
            if (e.five_vertex_critical) out.push_back(e.graph);
        return out;
    }();
    return family;
}

CatalogVerification verify_catalog() {
    CatalogVerification report;
    for (const auto& e : catalog_entries()) {
        CatalogVerification::Entry r;
        r.name = e.name;
        r.order_ok = e.graph.order() == e.expected_order;
        r.criticality_ok = is_k_vertex_critical(e.graph, 5) == e.five_vertex_critical;
        bool has_c5 = find_induced_c5(e.graph).has_value();
        if (e.name == "K5")
            r.induced_c5_ok = !has_c5;
        else if (e.five_vertex_critical)
            r.induced_c5_ok = has_c5;
        else
            r.induced_c5_ok = true;
        report.all_ok = report.all_ok && r.order_ok && r.criticality_ok && r.induced_c5_ok;
        report.entries.push_back(std::move(r));
    }
    return report;
}

} // namespace critgraph
