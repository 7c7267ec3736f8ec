#ifndef CRITGRAPH_CLAIMS_HPP
#define CRITGRAPH_CLAIMS_HPP

#include <string>
#include <vector>

#include "critgraph/c5_structure.hpp"

namespace critgraph {

// The claim checkers evaluate literal statements about the partition around
// an induced C5.  Each claim carries the subset of hypotheses its statement
// rests on:
//   (a) the host is (P5,bull)-free
//   (b) the host is 5-vertex-critical
//   (c) the host has no F-family member (catalog K5, F1..F9) as a subgraph
// A Verify-mode hypothesis that fails makes the claim NotApplicable; an
// Assume-mode hypothesis is taken on faith and noted in the report.  (c) is
// assumed by default: a Violated report on a genuinely critical free host is
// exactly how an F-subgraph shows up.
struct ClaimAssumptions {
    enum class Mode { Verify, Assume };
    Mode free = Mode::Verify;
    Mode critical = Mode::Verify;
    Mode no_f = Mode::Assume;
};

// stable id registry; the README carries the id -> statement map
const std::vector<std::string>& claim_ids();

ClaimReport check_claim(const Graph& g, const C5Partition& part, const std::string& id,
                        const ClaimAssumptions& assume = {});

std::vector<ClaimReport> check_all_claims(const Graph& g, const C5Partition& part,
                                          const ClaimAssumptions& assume = {});

// L = S0 & N(S5), R = S0 - L; R(i) = S2(i) & N(S3(i)), L(i) = S2(i) - R(i)
VertexSet claim_split_l(const Graph& g, const C5Partition& part);
VertexSet claim_split_r(const Graph& g, const C5Partition& part);
VertexSet claim_split_li(const Graph& g, const C5Partition& part, int i);
VertexSet claim_split_ri(const Graph& g, const C5Partition& part, int i);

// {"graph": <graph6>, "cycle": [5 ints],
//  "reports": [{"id", "status", "witness": [ints], "reason"}]}
std::string reports_to_json(const Graph& g, const std::array<int, 5>& cycle,
                            const std::vector<ClaimReport>& reports, bool pretty = false);

} // namespace critgraph

#endif
