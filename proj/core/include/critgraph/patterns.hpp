#ifndef CRITGRAPH_PATTERNS_HPP
#define CRITGRAPH_PATTERNS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Named small graphs used as forbidden patterns.
struct PatternName {
    enum class Tag { Path, Cycle, Complete, CompleteBipartite, Bull, TwoK2, DisjointUnion, Custom };

    Tag tag = Tag::Path;
    int a = 0, b = 0; // Path/Cycle/Complete order, bipartite part sizes
    std::vector<PatternName> parts;
    Graph custom;

    static PatternName path(int t);
    static PatternName cycle(int t);
    static PatternName complete(int n);
    static PatternName complete_bipartite(int r, int s);
    static PatternName bull();
    static PatternName two_k2();
    static PatternName disjoint_union(std::vector<PatternName> parts);
    static PatternName custom_graph(Graph g);

    std::string to_string() const;
};

// Accepts "P5", "C5", "K5", "K2,3", "bull", "2K2", "g6:<record>".
// Throws std::invalid_argument on anything else.
PatternName parse_pattern(std::string_view text);
std::vector<PatternName> parse_pattern_list(std::string_view csv);

// The named graph with its conventional labeling: paths and cycles in walk
// order, complete-bipartite parts contiguous, bull = pendant 0 - 1, triangle
// {1,2,3}, pendant 3 - 4.
Graph build_pattern(const PatternName& p);

// Injective map from pattern vertex i to host vertex map[i].  induced mode
// preserves adjacency and non-adjacency, subgraph mode adjacency only.
struct Embedding {
    std::vector<int> map;
};

std::optional<Embedding> contains_induced(const Graph& g, const Graph& h);
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h);
// restrict to embeddings whose image includes host vertex v (incremental
// checks after vertex augmentation: the rest of the host is known clean)
std::optional<Embedding> contains_induced_using(const Graph& g, const Graph& h, int v);

bool is_free(const Graph& g, const std::vector<PatternName>& patterns);

// An induced odd cycle of length >= 5 (antihole: in the complement); search is
// DFS over induced paths with chord pruning, exponential but fine at n <= 20.
std::optional<VertexSet> find_odd_hole(const Graph& g);
std::optional<VertexSet> find_odd_antihole(const Graph& g);

bool is_perfect(const Graph& g);

} // namespace critgraph

#endif
