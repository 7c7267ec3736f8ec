#include "critgraph/claims.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "critgraph/catalog.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

namespace {

enum Hyp : int { HypFree = 1, HypCritical = 2, HypNoF = 4 };

int required_hypotheses(const std::string& id) {
    static const std::map<std::string, int> req = {
        {"S5-independent", HypNoF},
        {"coloring-number", HypCritical},
        {"S0-nbhd", HypFree},
        {"S0-color", HypFree | HypCritical},
        {"S0-connected", HypFree | HypCritical},
        {"S0-4chromatic", HypFree | HypCritical},
        {"NS0-eq-S5", HypFree | HypCritical},
        {"L-S5", HypFree | HypCritical},
        {"LR-components", HypFree | HypCritical},
        {"R-le-8", HypFree | HypCritical},
        {"L-le-8", HypFree | HypCritical},
        {"S0-le-16", HypFree | HypCritical},
        {"S0-le-13", HypFree | HypCritical},
        {"S4i-S5", HypNoF},
        {"S5-le-2^16", HypFree | HypCritical | HypNoF},
        {"P3-same-nbhd", HypFree},
        {"Li-le-8", HypFree | HypCritical},
        {"P3-fig3", HypFree | HypCritical},
        {"Ri-P3-free", HypFree | HypCritical},
        {"Ri-K1-K2-counts", HypFree | HypCritical},
        {"Ri-K3-count", HypFree | HypCritical},
        {"S3-trivial-bound", HypFree | HypCritical},
        {"S4-trivial-bound", HypFree | HypCritical},
        {"S4i-2chrom", HypFree | HypCritical | HypNoF},
        {"S3i-2chrom", HypFree | HypCritical | HypNoF},
        {"property-1", HypFree}, {"property-2", HypFree}, {"property-3", HypFree},
        {"property-4", HypFree}, {"property-5", HypFree}, {"property-6", HypFree},
        {"property-7", HypFree},
    };
    auto it = req.find(id);
    if (it == req.end()) throw std::invalid_argument("unknown claim id: " + id);
    return it->second;
}

std::vector<int> to_ints(VertexSet s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    return out;
}

void append(std::vector<int>& dst, VertexSet s) {
    for (int v : s) dst.push_back(v);
}

std::optional<std::pair<int, int>> internal_edge(const Graph& g, VertexSet s) {
    for (int x : s)
        for (int y : g.neighbors(x) & s)
            if (y > x) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::pair<int, int>> missing_edge(const Graph& g, VertexSet a, VertexSet b) {
    for (int x : a)
        for (int y : b - VertexSet::single(x))
            if (!g.adjacent(x, y)) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::pair<int, int>> crossing_edge(const Graph& g, VertexSet a, VertexSet b) {
    for (int x : a)
        for (int y : (g.neighbors(x) & b) - VertexSet::single(x))
            return std::make_pair(x, y);
    return std::nullopt;
}

ClaimReport holds(std::string id, std::string reason = "") {
    ClaimReport r;
    r.id = std::move(id);
    r.status = ClaimStatus::Holds;
    r.reason = std::move(reason);
    return r;
}

ClaimReport violated(std::string id, std::vector<int> witness, std::string reason) {
    ClaimReport r;
    r.id = std::move(id);
    r.status = ClaimStatus::Violated;
    r.witness = std::move(witness);
    r.reason = std::move(reason);
    return r;
}

// ---- fixed splits ----------------------------------------------------------

struct Ctx {
    const Graph& g;
    const C5Partition& part;
    VertexSet l, r;                    // S0 split by N(S5)
    std::array<VertexSet, 5> li, ri;   // S2(i) split by N(S3(i))

    Ctx(const Graph& graph, const C5Partition& p) : g(graph), part(p) {
        l = p.s0 & graph.neighborhood_of(p.s5);
        r = p.s0 - l;
        for (int i = 1; i <= 5; ++i) {
            VertexSet s2 = p.s2_at(i);
            VertexSet near_s3;
            for (int v : s2)
                if (graph.neighbors(v).intersects(p.s3_at(i))) near_s3.add(v);
            ri[static_cast<size_t>(i - 1)] = near_s3;
            li[static_cast<size_t>(i - 1)] = s2 - near_s3;
        }
    }
    VertexSet li_at(int i) const { return li[static_cast<size_t>(C5Partition::idx(i))]; }
    VertexSet ri_at(int i) const { return ri[static_cast<size_t>(C5Partition::idx(i))]; }
};

// induced P3s u-v-w inside G[scope], u < w; fn returning true stops the scan
template <typename F>
bool for_each_p3(const Graph& g, VertexSet scope, F&& fn) {
    for (int v : scope) {
        VertexSet nb = g.neighbors(v) & scope;
        for (int u : nb)
            for (int w : nb)
                if (u < w && !g.adjacent(u, w))
                    if (fn(u, v, w)) return true;
    }
    return false;
}

// ---- per-claim checkers ----------------------------------------------------

ClaimReport claim_s5_independent(const Ctx& c) {
    if (auto e = internal_edge(c.g, c.part.s5))
        return violated("S5-independent", {e->first, e->second}, "edge inside S5");
    return holds("S5-independent");
}

ClaimReport claim_coloring_number(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        if (int chi = chromatic_of_subset(c.g, c.part.s3_at(i)); chi > 2)
            return violated("coloring-number", to_ints(c.part.s3_at(i)),
                            "chi(G[S3(" + std::to_string(i) + ")]) = " + std::to_string(chi) + " > 2");
        VertexSet s23 = c.part.s2_at(i) | c.part.s3_at(i);
        if (int chi = chromatic_of_subset(c.g, s23); chi > 3)
            return violated("coloring-number", to_ints(s23),
                            "chi(G[S2(" + std::to_string(i) + ") | S3(" + std::to_string(i) +
                                ")]) = " + std::to_string(chi) + " > 3");
        if (int chi = chromatic_of_subset(c.g, c.part.s4_at(i)); chi > 2)
            return violated("coloring-number", to_ints(c.part.s4_at(i)),
                            "chi(G[S4(" + std::to_string(i) + ")]) = " + std::to_string(chi) + " > 2");
    }
    VertexSet s50 = c.part.s5 | c.part.s0;
    if (int chi = chromatic_of_subset(c.g, s50); chi > 4)
        return violated("coloring-number", to_ints(s50),
                        "chi(G[S5 | S0]) = " + std::to_string(chi) + " > 4");
    return holds("coloring-number");
}

ClaimReport claim_s0_nbhd(const Ctx& c) {
    VertexSet outside = c.g.neighborhood_of(c.part.s0) - c.part.s5;
    if (!outside.empty()) {
        int w = outside.first();
        int partner = (c.g.neighbors(w) & c.part.s0).first();
        return violated("S0-nbhd", {w, partner}, "N(S0) reaches outside S5");
    }
    return holds("S0-nbhd");
}

ClaimReport claim_s0_color(const Ctx& c) {
    for (VertexSet comp : components_within(c.g, c.part.s0)) {
        int chi = chromatic_of_subset(c.g, comp);
        if (chi != 4)
            return violated("S0-color", to_ints(comp),
                            "component of G[S0] has chi = " + std::to_string(chi) + " != 4");
    }
    return holds("S0-color");
}

ClaimReport claim_s0_connected(const Ctx& c) {
    auto comps = components_within(c.g, c.part.s0);
    if (comps.size() > 1) {
        std::vector<int> w = to_ints(comps[0]);
        append(w, comps[1]);
        return violated("S0-connected", std::move(w),
                        "G[S0] has " + std::to_string(comps.size()) + " components");
    }
    return holds("S0-connected");
}

ClaimReport claim_s0_4chromatic(const Ctx& c) {
    if (c.part.s0.empty()) return holds("S0-4chromatic", "S0 empty");
    auto conn = claim_s0_connected(c);
    if (conn.status == ClaimStatus::Violated) {
        conn.id = "S0-4chromatic";
        return conn;
    }
    int chi = chromatic_of_subset(c.g, c.part.s0);
    if (chi != 4)
        return violated("S0-4chromatic", to_ints(c.part.s0),
                        "chi(G[S0]) = " + std::to_string(chi) + " != 4");
    return holds("S0-4chromatic");
}

ClaimReport claim_ns0_eq_s5(const Ctx& c) {
    VertexSet n = c.g.neighborhood_of(c.part.s0);
    if (n != c.part.s5)
        return violated("NS0-eq-S5", to_ints(n ^ c.part.s5), "N(S0) differs from S5");
    return holds("NS0-eq-S5");
}

ClaimReport claim_l_s5(const Ctx& c) {
    if (c.r.empty()) return holds("L-S5", "R empty");
    if (auto e = missing_edge(c.g, c.l, c.part.s5))
        return violated("L-S5", {e->first, e->second}, "L not complete to S5");
    VertexSet nr = c.g.neighborhood_of(c.r);
    if (nr != c.l)
        return violated("L-S5", to_ints(nr ^ c.l), "N(R) differs from L");
    return holds("L-S5");
}

ClaimReport claim_lr_components(const Ctx& c) {
    for (VertexSet lc : components_within(c.g, c.l)) {
        for (VertexSet rc : components_within(c.g, c.r)) {
            bool complete = c.g.complete_between(lc, rc);
            bool anti = c.g.anticomplete_between(lc, rc);
            if (!complete && !anti) {
                auto edge = crossing_edge(c.g, lc, rc);
                auto gap = missing_edge(c.g, lc, rc);
                return violated("LR-components",
                                {edge->first, edge->second, gap->first, gap->second},
                                "component of G[L] mixed on component of G[R]");
            }
        }
    }
    return holds("LR-components");
}

ClaimReport claim_r_le_8(const Ctx& c) {
    if (c.r.count() > 8)
        return violated("R-le-8", to_ints(c.r), "|R| = " + std::to_string(c.r.count()) + " > 8");
    return holds("R-le-8");
}

ClaimReport claim_l_le_8(const Ctx& c) {
    if (c.r.empty()) return holds("L-le-8", "R empty");
    if (c.l.count() > 8)
        return violated("L-le-8", to_ints(c.l), "|L| = " + std::to_string(c.l.count()) + " > 8");
    return holds("L-le-8");
}

ClaimReport claim_s0_le_16(const Ctx& c) {
    if (c.r.empty()) return holds("S0-le-16", "R empty");
    if (c.part.s0.count() > 16)
        return violated("S0-le-16", to_ints(c.part.s0),
                        "|S0| = " + std::to_string(c.part.s0.count()) + " > 16");
    return holds("S0-le-16");
}

ClaimReport claim_s0_le_13(const Ctx& c) {
    if (!c.r.empty()) return holds("S0-le-13", "R nonempty");
    if (c.part.s0.count() > 13)
        return violated("S0-le-13", to_ints(c.part.s0),
                        "|S0| = " + std::to_string(c.part.s0.count()) + " > 13");
    return holds("S0-le-13");
}

ClaimReport claim_s4i_s5(const Ctx& c) {
    std::vector<int> touching;
    for (int i = 1; i <= 5; ++i)
        if (!c.g.anticomplete_between(c.part.s4_at(i), c.part.s5)) touching.push_back(i);
    if (touching.size() >= 2) {
        std::vector<int> w;
        for (int k = 0; k < 2; ++k) {
            auto e = crossing_edge(c.g, c.part.s4_at(touching[static_cast<size_t>(k)]), c.part.s5);
            w.push_back(e->first);
            w.push_back(e->second);
        }
        return violated("S4i-S5", std::move(w),
                        "S4(" + std::to_string(touching[0]) + ") and S4(" +
                            std::to_string(touching[1]) + ") both meet S5");
    }
    return holds("S4i-S5");
}

ClaimReport claim_s5_le_2_16(const Ctx& c) {
    // the pigeonhole bound is 2^|S0|, capped by the headline constant 2^16
    int exp = std::min(c.part.s0.count(), 16);
    unsigned long long cap = 1ULL << exp;
    if (static_cast<unsigned long long>(c.part.s5.count()) > cap)
        return violated("S5-le-2^16", to_ints(c.part.s5),
                        "|S5| = " + std::to_string(c.part.s5.count()) + " > 2^" +
                            std::to_string(exp));
    return holds("S5-le-2^16");
}

ClaimReport claim_p3_same_nbhd(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        VertexSet s3 = c.part.s3_at(i);
        ClaimReport bad;
        bool found = for_each_p3(c.g, c.ri_at(i), [&](int u, int v, int w) {
            if ((c.g.neighbors(u) & s3) != (c.g.neighbors(w) & s3)) {
                bad = violated("P3-same-nbhd", {u, v, w},
                               "i=" + std::to_string(i) +
                                   ": P3 endpoints differ on S3(" + std::to_string(i) + ")");
                return true;
            }
            return false;
        });
        if (found) return bad;
    }
    return holds("P3-same-nbhd");
}

ClaimReport claim_li_le_8(const Ctx& c) {
    for (int i = 1; i <= 5; ++i)
        if (c.li_at(i).count() > 8)
            return violated("Li-le-8", to_ints(c.li_at(i)),
                            "|L(" + std::to_string(i) + ")| = " +
                                std::to_string(c.li_at(i).count()) + " > 8");
    return holds("Li-le-8");
}

// the two-triangle completion required around any P3 of G[R(i)]:
// triangles s-u-v and t-v-w sharing v, with uw, st, sw, ut non-edges
bool fig3_completion(const Graph& g, VertexSet ri, VertexSet s3, int u, int v, int w) {
    VertexSet pool = ri - VertexSet::single(u) - VertexSet::single(v) - VertexSet::single(w);
    VertexSet nu3 = g.neighbors(u) & s3;
    if (nu3 != (g.neighbors(w) & s3)) return false;
    if (nu3.intersects(g.neighbors(v))) return false; // N_S3(u) and N_S3(v) must be disjoint
    for (int s : pool & g.neighbors(u) & g.neighbors(v)) {
        if (g.adjacent(s, w)) continue;
        if ((g.neighbors(s) & s3) != nu3) continue;
        for (int t : (pool & g.neighbors(w) & g.neighbors(v)) - VertexSet::single(s)) {
            if (g.adjacent(t, u) || g.adjacent(t, s)) continue;
            if ((g.neighbors(t) & s3) != nu3) continue;
            return true;
        }
    }
    return false;
}

ClaimReport claim_p3_fig3(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        VertexSet ri = c.ri_at(i), s3 = c.part.s3_at(i);
        ClaimReport bad;
        bool found = for_each_p3(c.g, ri, [&](int u, int v, int w) {
            if (!fig3_completion(c.g, ri, s3, u, v, w)) {
                bad = violated("P3-fig3", {u, v, w},
                               "i=" + std::to_string(i) + ": P3 lacks the two-triangle completion");
                return true;
            }
            return false;
        });
        if (found) return bad;
    }
    return holds("P3-fig3");
}

ClaimReport claim_ri_p3_free(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        ClaimReport bad;
        bool found = for_each_p3(c.g, c.ri_at(i), [&](int u, int v, int w) {
            bad = violated("Ri-P3-free", {u, v, w},
                           "i=" + std::to_string(i) + ": induced P3 in G[R(i)]");
            return true;
        });
        if (found) return bad;
    }
    return holds("Ri-P3-free");
}

ClaimReport claim_ri_k1_k2_counts(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        auto comps = components_within(c.g, c.ri_at(i));
        std::vector<int> k1s, k2s;
        for (VertexSet comp : comps) {
            if (comp.count() == 1) append(k1s, comp);
            if (comp.count() == 2) append(k2s, comp);
        }
        int lexp = c.li_at(i).count();
        if (lexp < 6 && static_cast<int>(k1s.size()) > (1 << lexp))
            return violated("Ri-K1-K2-counts", k1s,
                            "i=" + std::to_string(i) + ": " + std::to_string(k1s.size()) +
                                " K1-components > 2^" + std::to_string(lexp));
        if (k2s.size() > 10) // 5 components, 2 vertices each
            return violated("Ri-K1-K2-counts", k2s,
                            "i=" + std::to_string(i) + ": " + std::to_string(k2s.size() / 2) +
                                " K2-components > 5");
    }
    return holds("Ri-K1-K2-counts");
}

ClaimReport claim_ri_k3_count(const Ctx& c) {
    for (int i = 1; i <= 5; ++i) {
        std::vector<VertexSet> triangles;
        for (VertexSet comp : components_within(c.g, c.ri_at(i)))
            if (comp.count() == 3 && induced_subgraph(c.g, comp).edge_count() == 3)
                triangles.push_back(comp);
        if (triangles.size() > 1) {
            std::vector<int> w = to_ints(triangles[0]);
            append(w, triangles[1]);
            return violated("Ri-K3-count", std::move(w),
                            "i=" + std::to_string(i) + ": " + std::to_string(triangles.size()) +
                                " K3-components > 1");
        }
    }
    return holds("Ri-K3-count");
}

ClaimReport count_k1_bound(const Ctx& c, const std::string& id, bool s3_mode) {
    for (int i = 1; i <= 5; ++i) {
        VertexSet scope = s3_mode ? c.part.s3_at(i) : c.part.s4_at(i);
        VertexSet ref = s3_mode ? (c.part.s2_at(i) | c.part.s5) : c.part.s5;
        std::vector<int> k1s;
        for (VertexSet comp : components_within(c.g, scope))
            if (comp.count() == 1) append(k1s, comp);
        int exp = ref.count();
        if (exp < 6 && static_cast<int>(k1s.size()) > (1 << exp))
            return violated(id, k1s,
                            "i=" + std::to_string(i) + ": " + std::to_string(k1s.size()) +
                                " K1-components > 2^" + std::to_string(exp));
    }
    return holds(id);
}

ClaimReport claim_s4i_2chrom(const Ctx& c) {
    const std::string id = "S4i-2chrom";
    for (int i = 1; i <= 5; ++i) {
        if (chromatic_of_subset(c.g, c.part.s4_at(i)) != 2) continue;
        std::string tag = "chi(G[S4(" + std::to_string(i) + ")]) = 2: ";
        for (int off : {2, 3})
            if (!c.part.s3_at(i + off).empty())
                return violated(id, to_ints(c.part.s3_at(i + off)),
                                tag + "S3(" + std::to_string((i + off - 1) % 5 + 1) + ") nonempty");
        for (int j = 1; j <= 5; ++j) {
            if (j == i) continue;
            if (auto e = internal_edge(c.g, c.part.s4_at(j)))
                return violated(id, {e->first, e->second},
                                tag + "edge inside S4(" + std::to_string(j) + ")");
        }
        for (int off : {-1, 0, 1})
            if (auto e = internal_edge(c.g, c.part.s3_at(i + off)))
                return violated(id, {e->first, e->second},
                                tag + "edge inside S3(" + std::to_string((i + off + 4) % 5 + 1) + ")");
    }
    return holds(id);
}

ClaimReport claim_s3i_2chrom(const Ctx& c) {
    const std::string id = "S3i-2chrom";
    for (int i = 1; i <= 5; ++i) {
        if (chromatic_of_subset(c.g, c.part.s3_at(i)) != 2) continue;
        std::string tag = "chi(G[S3(" + std::to_string(i) + ")]) = 2: ";
        for (int off : {-1, 1})
            if (!c.part.s3_at(i + off).empty())
                return violated(id, to_ints(c.part.s3_at(i + off)),
                                tag + "S3(" + std::to_string((i + off + 4) % 5 + 1) + ") nonempty");
        for (int off : {-2, 2})
            if (!c.part.s4_at(i + off).empty())
                return violated(id, to_ints(c.part.s4_at(i + off)),
                                tag + "S4(" + std::to_string((i + off + 4) % 5 + 1) + ") nonempty");
        for (int off : {-1, 0, 1})
            if (auto e = internal_edge(c.g, c.part.s4_at(i + off)))
                return violated(id, {e->first, e->second},
                                tag + "edge inside S4(" + std::to_string((i + off + 4) % 5 + 1) + ")");
        for (int off : {-2, 2})
            if (auto e = internal_edge(c.g, c.part.s3_at(i + off)))
                return violated(id, {e->first, e->second},
                                tag + "edge inside S3(" + std::to_string((i + off + 4) % 5 + 1) + ")");
    }
    return holds(id);
}

ClaimReport claim_property(const Ctx& c, int p) {
    for (int i = 1; i <= 5; ++i) {
        ClaimReport r = check_property(c.g, c.part, p, i);
        if (r.status == ClaimStatus::Violated) return r;
    }
    return holds("property-" + std::to_string(p));
}

ClaimReport dispatch(const Ctx& c, const std::string& id) {
    if (id == "S5-independent") return claim_s5_independent(c);
    if (id == "coloring-number") return claim_coloring_number(c);
    if (id == "S0-nbhd") return claim_s0_nbhd(c);
    if (id == "S0-color") return claim_s0_color(c);
    if (id == "S0-connected") return claim_s0_connected(c);
    if (id == "S0-4chromatic") return claim_s0_4chromatic(c);
    if (id == "NS0-eq-S5") return claim_ns0_eq_s5(c);
    if (id == "L-S5") return claim_l_s5(c);
    if (id == "LR-components") return claim_lr_components(c);
    if (id == "R-le-8") return claim_r_le_8(c);
    if (id == "L-le-8") return claim_l_le_8(c);
    if (id == "S0-le-16") return claim_s0_le_16(c);
    if (id == "S0-le-13") return claim_s0_le_13(c);
    if (id == "S4i-S5") return claim_s4i_s5(c);
    if (id == "S5-le-2^16") return claim_s5_le_2_16(c);
    if (id == "P3-same-nbhd") return claim_p3_same_nbhd(c);
    if (id == "Li-le-8") return claim_li_le_8(c);
    if (id == "P3-fig3") return claim_p3_fig3(c);
    if (id == "Ri-P3-free") return claim_ri_p3_free(c);
    if (id == "Ri-K1-K2-counts") return claim_ri_k1_k2_counts(c);
    if (id == "Ri-K3-count") return claim_ri_k3_count(c);
    if (id == "S3-trivial-bound") return count_k1_bound(c, "S3-trivial-bound", true);
    if (id == "S4-trivial-bound") return count_k1_bound(c, "S4-trivial-bound", false);
    if (id == "S4i-2chrom") return claim_s4i_2chrom(c);
    if (id == "S3i-2chrom") return claim_s3i_2chrom(c);
    if (id.starts_with("property-") && id.size() == 10 && id[9] >= '1' && id[9] <= '7')
        return claim_property(c, id[9] - '0');
    throw std::invalid_argument("unknown claim id: " + id);
}

} // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "S5-independent", "coloring-number", "S0-nbhd", "S0-color", "S0-connected",
        "S0-4chromatic", "NS0-eq-S5", "L-S5", "LR-components", "R-le-8", "L-le-8",
        "S0-le-16", "S0-le-13", "S4i-S5", "S5-le-2^16", "P3-same-nbhd", "Li-le-8",
        "P3-fig3", "Ri-P3-free", "Ri-K1-K2-counts", "Ri-K3-count", "S3-trivial-bound",
        "S4-trivial-bound", "S4i-2chrom", "S3i-2chrom", "property-1", "property-2",
        "property-3", "property-4", "property-5", "property-6", "property-7",
    };
    return ids;
}

VertexSet claim_split_l(const Graph& g, const C5Partition& part) { return Ctx(g, part).l; }
VertexSet claim_split_r(const Graph& g, const C5Partition& part) { return Ctx(g, part).r; }
VertexSet claim_split_li(const Graph& g, const C5Partition& part, int i) {
    return Ctx(g, part).li_at(i);
}
VertexSet claim_split_ri(const Graph& g, const C5Partition& part, int i) {
    return Ctx(g, part).ri_at(i);
}

ClaimReport check_claim(const Graph& g, const C5Partition& part, const std::string& id,
                        const ClaimAssumptions& assume) {
    int req = required_hypotheses(id);
    std::string assumed;
    auto gate = [&](int bit, ClaimAssumptions::Mode mode, const char* name,
                    auto&& verify) -> std::optional<ClaimReport> {
        if (!(req & bit)) return std::nullopt;
        if (mode == ClaimAssumptions::Mode::Assume) {
            if (!assumed.empty()) assumed += ", ";
            assumed += name;
            return std::nullopt;
        }
        if (!verify()) {
            ClaimReport r;
            r.id = id;
            r.status = ClaimStatus::NotApplicable;
            r.reason = std::string("hypothesis failed: ") + name;
            return r;
        }
        return std::nullopt;
    };

    if (auto r = gate(HypFree, assume.free, "(P5,bull)-free", [&] {
            return is_free(g, {PatternName::path(5), PatternName::bull()});
        }))
        return *r;
    if (auto r = gate(HypCritical, assume.critical, "5-vertex-critical",
                      [&] { return is_k_vertex_critical(g, 5); }))
        return *r;
    if (auto r = gate(HypNoF, assume.no_f, "no-F-subgraph", [&] {
            for (const Graph& f : f_family())
                if (contains_subgraph(g, f)) return false;
            return true;
        }))
        return *r;

    Ctx ctx(g, part);
    ClaimReport report = dispatch(ctx, id);
    if (!assumed.empty()) {
        if (!report.reason.empty()) report.reason += "; ";
        report.reason += "assumed: " + assumed;
    }
    return report;
}

std::vector<ClaimReport> check_all_claims(const Graph& g, const C5Partition& part,
                                          const ClaimAssumptions& assume) {
    std::vector<ClaimReport> out;
    out.reserve(claim_ids().size());
    for (const auto& id : claim_ids()) out.push_back(check_claim(g, part, id, assume));
    return out;
}

std::string reports_to_json(const Graph& g, const std::array<int, 5>& cycle,
                            const std::vector<ClaimReport>& reports, bool pretty) {
    nlohmann::json j;
    j["graph"] = to_graph6(g);
    j["cycle"] = cycle;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["status"] = to_string(r.status);
        jr["witness"] = r.witness;
        jr["reason"] = r.reason;
        j["reports"].push_back(std::move(jr));
    }
    return pretty ? j.dump(2) : j.dump();
}

} // namespace critgraph
