#ifndef CRITGRAPH_C5_STRUCTURE_HPP
#define CRITGRAPH_C5_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

// Partition of the vertices outside an induced 5-cycle by their neighborhood
// on the cycle.  S(X) = vertices whose cycle neighborhood is exactly X.
// Cycle positions are 1..5 with arithmetic mod 5 mapped back into 1..5:
//   S2(i) = S(v[i-1], v[i+1])
//   S3(i) = S(v[i-1], v[i], v[i+1])
//   S4(i) = S(all but v[i])
// For a (P5,bull)-free host the classes with one cycle neighbor, an adjacent
// pair, or a spread triple {v[i-2],v[i],v[i+2]} are empty; nonempty ones are
// listed in excluded_nonempty.
struct C5Partition {
    std::array<int, 5> cycle{}; // positions 1..5 stored at index 0..4
    VertexSet s0, s5;
    std::array<VertexSet, 5> s2{}, s3{}, s4{};
    std::array<VertexSet, 32> raw{}; // 5-bit mask over cycle positions -> S(X)
    std::vector<std::pair<std::uint8_t, VertexSet>> excluded_nonempty;

    // map any integer into 0..4 as an index for position i (1-based, mod 5)
    static int idx(int i) { return ((i - 1) % 5 + 5) % 5; }
    VertexSet s2_at(int i) const { return s2[static_cast<size_t>(idx(i))]; }
    VertexSet s3_at(int i) const { return s3[static_cast<size_t>(idx(i))]; }
    VertexSet s4_at(int i) const { return s4[static_cast<size_t>(idx(i))]; }

    VertexSet cycle_set() const;
    VertexSet outside(const Graph& g) const { return g.vertices() - cycle_set(); }
    VertexSet s2_union() const;
    VertexSet s3_union() const;
    VertexSet s4_union() const;
};

// Deterministic: the lexicographically least tuple (v1..v5) over all induced
// 5-cycles, direction fixed by v2 < v5.
std::optional<std::array<int, 5>> find_induced_c5(const Graph& g);
std::vector<std::array<int, 5>> all_induced_c5(const Graph& g);

// Throws std::invalid_argument unless cycle is an induced C5 of g.
C5Partition partition_around_c5(const Graph& g, const std::array<int, 5>& cycle);

enum class ClaimStatus { Holds, Violated, NotApplicable };
const char* to_string(ClaimStatus s);

struct ClaimReport {
    std::string id;
    ClaimStatus status = ClaimStatus::Holds;
    std::vector<int> witness;
    std::string reason;
};

// One report per property per rotation i = 1..5 (35 total), gated on the host
// being (P5,bull)-free.  Property p at rotation i, indices mod 5:
//   1: S2(i) complete to S2(i+1) | S3(i+1)      5: S2(i)|S3(i) complete to S4(i+2)
//   2: S2(i) anticomplete to S2(i+2)            6: S2(i) complete to S4(i+1) | S5
//   3: S2(i) anticomplete to S3(i+2)            7: S3(i) complete to S3(i+1)
//   4: S2(i) anticomplete to S4(i)
std::vector<ClaimReport> check_neighborhood_properties(const Graph& g, const C5Partition& part);

// property p in 1..7 at a single rotation; no hypothesis gate
ClaimReport check_property(const Graph& g, const C5Partition& part, int p, int i);

// G(n, edge_prob) sample, then repeatedly delete the lowest vertex of any
// found forbidden embedding until free.  Deterministic given the seed; the
// result may have fewer than n vertices.
Graph random_free_graph(int n, double edge_prob, std::uint64_t seed,
                        const std::vector<PatternName>& forbidden);

} // namespace critgraph

#endif
