#include "critgraph/c5_structure.hpp"

#include <random>
#include <stdexcept>

namespace critgraph {

VertexSet C5Partition::cycle_set() const {
    VertexSet s;
    for (int v : cycle) s.add(v);
    return s;
}

VertexSet C5Partition::s2_union() const {
    VertexSet u;
    for (auto s : s2) u |= s;
    return u;
}

VertexSet C5Partition::s3_union() const {
    VertexSet u;
    for (auto s : s3) u |= s;
    return u;
}

VertexSet C5Partition::s4_union() const {
    VertexSet u;
    for (auto s : s4) u |= s;
    return u;
}

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Holds: return "Holds";
        case ClaimStatus::Violated: return "Violated";
        case ClaimStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

bool is_induced_c5(const Graph& g, const std::array<int, 5>& c) {
    VertexSet seen;
    for (int v : c) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == 4);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

template <typename F>
void for_each_induced_c5(const Graph& g, F&& fn) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int c : g.neighbors(b)) {
                if (c <= a || c == b || g.adjacent(c, a)) continue;
                for (int d : g.neighbors(c)) {
                    if (d <= a || d == b || g.adjacent(d, a) || g.adjacent(d, b)) continue;
                    for (int e : g.neighbors(d)) {
                        if (e <= b || e == c || g.adjacent(e, b) || g.adjacent(e, c) ||
                            !g.adjacent(e, a))
                            continue;
                        if (fn(std::array<int, 5>{a, b, c, d, e})) return;
                    }
                }
            }
        }
    }
}

} // namespace

std::optional<std::array<int, 5>> find_induced_c5(const Graph& g) {
    std::optional<std::array<int, 5>> out;
    for_each_induced_c5(g, [&](const std::array<int, 5>& c) {
        out = c;
        return true;
    });
    return out;
}

std::vector<std::array<int, 5>> all_induced_c5(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    for_each_induced_c5(g, [&](const std::array<int, 5>& c) {
        out.push_back(c);
        return false;
    });
    return out;
}

C5Partition partition_around_c5(const Graph& g, const std::array<int, 5>& cycle) {
    if (!is_induced_c5(g, cycle))
        throw std::invalid_argument("cycle is not an induced C5 of the graph");
    C5Partition part;
    part.cycle = cycle;
    VertexSet on_cycle = part.cycle_set();
    for (int v : g.vertices() - on_cycle) {
        std::uint8_t mask = 0;
        for (int p = 0; p < 5; ++p)
            if (g.adjacent(v, cycle[p])) mask |= static_cast<std::uint8_t>(1u << p);
        part.raw[mask].add(v);
    }
    part.s0 = part.raw[0];
    part.s5 = part.raw[31];
    auto bit = [](int pos) { return static_cast<std::uint8_t>(1u << (((pos - 1) % 5 + 5) % 5)); };
    for (int i = 1; i <= 5; ++i) {
        part.s2[i - 1] = part.raw[bit(i - 1) | bit(i + 1)];
        part.s3[i - 1] = part.raw[bit(i - 1) | bit(i) | bit(i + 1)];
        part.s4[i - 1] = part.raw[static_cast<std::uint8_t>(31u & ~bit(i))];
    }
    // classes that cannot occur around a C5 in a (P5,bull)-free host:
    // one neighbor, an adjacent pair, or a spread triple
    for (int mask = 1; mask < 31; ++mask) {
        if (part.raw[mask].empty()) continue;
        int pc = std::popcount(static_cast<unsigned>(mask));
        bool excluded = false;
        if (pc == 1) {
            excluded = true;
        } else if (pc == 2 || pc == 3) {
            bool consecutive_form = false;
            for (int i = 1; i <= 5; ++i) {
                if (pc == 2 && mask == (bit(i - 1) | bit(i + 1))) consecutive_form = true;
                if (pc == 3 && mask == (bit(i - 1) | bit(i) | bit(i + 1))) consecutive_form = true;
            }
            excluded = !consecutive_form;
        }
        if (excluded)
            part.excluded_nonempty.emplace_back(static_cast<std::uint8_t>(mask), part.raw[mask]);
    }
    return part;
}

namespace {

// first x in a adjacent to nothing of b, with the missing partner
std::optional<std::pair<int, int>> first_noncomplete(const Graph& g, VertexSet a, VertexSet b) {
    for (int x : a)
        for (int y : b)
            if (!g.adjacent(x, y)) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::pair<int, int>> first_adjacent(const Graph& g, VertexSet a, VertexSet b) {
    for (int x : a)
        for (int y : b - VertexSet::single(x))
            if (g.adjacent(x, y)) return std::make_pair(x, y);
    return std::nullopt;
}

} // namespace

ClaimReport check_property(const Graph& g, const C5Partition& part, int p, int i) {
    ClaimReport r;
    r.id = "property-" + std::to_string(p);
    r.reason = "i=" + std::to_string(i);
    std::optional<std::pair<int, int>> bad;
    bool want_complete = false;
    switch (p) {
        case 1:
            bad = first_noncomplete(g, part.s2_at(i), part.s2_at(i + 1) | part.s3_at(i + 1));
            want_complete = true;
            break;
        case 2: bad = first_adjacent(g, part.s2_at(i), part.s2_at(i + 2)); break;
        case 3: bad = first_adjacent(g, part.s2_at(i), part.s3_at(i + 2)); break;
        case 4: bad = first_adjacent(g, part.s2_at(i), part.s4_at(i)); break;
        case 5:
            bad = first_noncomplete(g, part.s2_at(i) | part.s3_at(i), part.s4_at(i + 2));
            want_complete = true;
            break;
        case 6:
            bad = first_noncomplete(g, part.s2_at(i), part.s4_at(i + 1) | part.s5);
            want_complete = true;
            break;
        case 7:
            bad = first_noncomplete(g, part.s3_at(i), part.s3_at(i + 1));
            want_complete = true;
            break;
        default: throw std::invalid_argument("property index must be 1..7");
    }
    if (bad) {
        r.status = ClaimStatus::Violated;
        r.witness = {bad->first, bad->second};
        r.reason += want_complete ? ": missing edge" : ": forbidden edge";
    }
    return r;
}

std::vector<ClaimReport> check_neighborhood_properties(const Graph& g, const C5Partition& part) {
    std::vector<ClaimReport> out;
    out.reserve(35);
    bool free = is_free(g, {PatternName::path(5), PatternName::bull()});
    for (int p = 1; p <= 7; ++p) {
        for (int i = 1; i <= 5; ++i) {
            if (!free) {
                ClaimReport r;
                r.id = "property-" + std::to_string(p);
                r.status = ClaimStatus::NotApplicable;
                r.reason = "i=" + std::to_string(i) + ": host is not (P5,bull)-free";
                out.push_back(std::move(r));
            } else {
                out.push_back(check_property(g, part, p, i));
            }
        }
    }
    return out;
}

Graph random_free_graph(int n, double edge_prob, std::uint64_t seed,
                        const std::vector<PatternName>& forbidden) {
    if (n < 0 || n > Graph::kMaxVertices) throw std::invalid_argument("n out of range");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(edge_prob);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);

    std::vector<Graph> pats;
    pats.reserve(forbidden.size());
    for (const auto& p : forbidden) pats.push_back(build_pattern(p));
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (const Graph& pat : pats) {
            if (auto emb = contains_induced(g, pat)) {
                int victim = g.order();
                for (int hv : emb->map) victim = std::min(victim, hv);
                g = remove_vertex(g, victim);
                dirty = true;
                break;
            }
        }
    }
    return g;
}

} // namespace critgraph
