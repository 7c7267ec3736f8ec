#ifndef CRITGRAPH_ENUMERATE_HPP
#define CRITGRAPH_ENUMERATE_HPP

#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

// Exhaustive isomorphism-free generation by vertex augmentation with a
// canonical parent test: a child is kept only when deleting the vertex at the
// last canonical position reproduces its actual parent (checked by canonical
// key), plus per-parent child dedup.  Both pruning rules are hereditary, so
// cutting a child cuts no descendant that could still be reached elsewhere.
struct EnumSpec {
    int k = 4;                          // target chromatic number
    std::vector<PatternName> forbidden; // induced patterns the outputs avoid
    int n_max = 12;
    int shard_residue = 0;  // explore depth-2 branches with index = residue (mod modulus)
    int shard_modulus = 1;
    struct PruneFlags {
        bool forbidden_patterns = true; // drop children containing a forbidden pattern
        bool colorability = true;       // drop children that are not k-colorable
    } prune;
    int threads = 1;
};

struct EnumResult {
    std::vector<std::string> graphs; // canonical graph6 records, sorted by (order, record)
    std::map<int, long> counts_per_order;
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
    bool complete = true;
};

struct EnumCallbacks {
    std::function<void(const std::string&)> emit; // sorted records, after the merge
    std::function<void(int done, int total, long long nodes)> progress; // per finished branch
};

// Outputs are exactly the isomorphism classes of k-vertex-critical graphs of
// order <= n_max avoiding the forbidden patterns; acceptance re-checks
// freeness, connectivity, min degree >= k-1, no comparable pair and no clique
// cutset before the criticality test, so prune flags only affect speed.
EnumResult enumerate_critical(const EnumSpec& spec, const EnumCallbacks& cb = {},
                              const std::atomic<bool>* cancel = nullptr);

// Every isomorphism class of order exactly n, visited once; n <= 9.
long enumerate_all_graphs(int n, const std::function<void(const Graph&)>& sink);

// Isomorph-free generation of every class of order <= n_max surviving keep, a
// hereditary filter over children (arg 2 is the just-added vertex).  visit is
// called once per class.  Single-threaded, unsharded.
void enumerate_classes(int n_max, const std::function<bool(const Graph&, int)>& keep,
                       const std::function<void(const Graph&)>& visit);

} // namespace critgraph

#endif
