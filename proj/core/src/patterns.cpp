#include "critgraph/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "critgraph/graph6.hpp"

namespace critgraph {

PatternName PatternName::path(int t) {
    if (t < 1) throw std::invalid_argument("path order must be >= 1");
    PatternName p;
    p.tag = Tag::Path;
    p.a = t;
    return p;
}

PatternName PatternName::cycle(int t) {
    if (t < 3) throw std::invalid_argument("cycle order must be >= 3");
    PatternName p;
    p.tag = Tag::Cycle;
    p.a = t;
    return p;
}

PatternName PatternName::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete order must be >= 1");
    PatternName p;
    p.tag = Tag::Complete;
    p.a = n;
    return p;
}

PatternName PatternName::complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("bipartite parts must be >= 1");
    PatternName p;
    p.tag = Tag::CompleteBipartite;
    p.a = r;
    p.b = s;
    return p;
}

PatternName PatternName::bull() {
    PatternName p;
    p.tag = Tag::Bull;
    return p;
}

PatternName PatternName::two_k2() {
    PatternName p;
    p.tag = Tag::TwoK2;
    return p;
}

PatternName PatternName::disjoint_union(std::vector<PatternName> parts) {
    PatternName p;
    p.tag = Tag::DisjointUnion;
    p.parts = std::move(parts);
    return p;
}

PatternName PatternName::custom_graph(Graph g) {
    PatternName p;
    p.tag = Tag::Custom;
    p.custom = std::move(g);
    return p;
}

std::string PatternName::to_string() const {
    switch (tag) {
        case Tag::Path: return "P" + std::to_string(a);
        case Tag::Cycle: return "C" + std::to_string(a);
        case Tag::Complete: return "K" + std::to_string(a);
        case Tag::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
        case Tag::Bull: return "bull";
        case Tag::TwoK2: return "2K2";
        case Tag::DisjointUnion: {
            std::string s;
            for (const auto& q : parts) {
                if (!s.empty()) s += "+";
                s += q.to_string();
            }
            return s;
        }
        case Tag::Custom: return "g6:" + to_graph6(custom);
    }
    return "?";
}

PatternName parse_pattern(std::string_view text) {
    if (text == "bull") return PatternName::bull();
    if (text == "2K2") return PatternName::two_k2();
    if (text.starts_with("g6:")) return PatternName::custom_graph(from_graph6(text.substr(3)));
    auto parse_int = [](std::string_view s) -> int {
        if (s.empty()) throw std::invalid_argument("missing number in pattern name");
        int val = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad number in pattern name");
            val = val * 10 + (c - '0');
            if (val > Graph::kMaxVertices) throw std::invalid_argument("pattern too large");
        }
        return val;
    };
    if (text.size() >= 2 && (text[0] == 'P' || text[0] == 'C' || text[0] == 'K')) {
        auto rest = text.substr(1);
        if (text[0] == 'K') {
            if (auto comma = rest.find(','); comma != std::string_view::npos)
                return PatternName::complete_bipartite(parse_int(rest.substr(0, comma)),
                                                       parse_int(rest.substr(comma + 1)));
            return PatternName::complete(parse_int(rest));
        }
        int t = parse_int(rest);
        return text[0] == 'P' ? PatternName::path(t) : PatternName::cycle(t);
    }
    throw std::invalid_argument("unknown pattern name: " + std::string(text));
}

std::vector<PatternName> parse_pattern_list(std::string_view csv) {
    std::vector<PatternName> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        // "K2,3" style names contain a comma; try the longer token first
        if (comma != std::string_view::npos && comma + 1 < csv.size() &&
            csv[start] == 'K' && std::isdigit(static_cast<unsigned char>(csv[comma + 1]))) {
            size_t end = csv.find(',', comma + 1);
            std::string_view token = csv.substr(start, (end == std::string_view::npos ? csv.size() : end) - start);
            try {
                out.push_back(parse_pattern(token));
                start = end == std::string_view::npos ? csv.size() + 1 : end + 1;
                continue;
            } catch (const std::invalid_argument&) {
                // fall through: the comma was a separator after all
            }
        }
        std::string_view token = csv.substr(start, (comma == std::string_view::npos ? csv.size() : comma) - start);
        if (!token.empty()) out.push_back(parse_pattern(token));
        start = comma == std::string_view::npos ? csv.size() + 1 : comma + 1;
    }
    return out;
}

Graph build_pattern(const PatternName& p) {
    using Tag = PatternName::Tag;
    switch (p.tag) {
        case Tag::Path: {
            Graph g(p.a);
            for (int v = 0; v + 1 < p.a; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case Tag::Cycle: {
            Graph g(p.a);
            for (int v = 0; v + 1 < p.a; ++v) g.add_edge(v, v + 1);
            g.add_edge(p.a - 1, 0);
            return g;
        }
        case Tag::Complete: {
            Graph g(p.a);
            for (int v = 0; v < p.a; ++v)
                for (int u = v + 1; u < p.a; ++u) g.add_edge(v, u);
            return g;
        }
        case Tag::CompleteBipartite: {
            Graph g(p.a + p.b);
            for (int v = 0; v < p.a; ++v)
                for (int u = p.a; u < p.a + p.b; ++u) g.add_edge(v, u);
            return g;
        }
        case Tag::Bull:
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
        case Tag::TwoK2:
            return Graph::from_edges(4, {{0, 1}, {2, 3}});
        case Tag::DisjointUnion: {
            Graph g(0);
            for (const auto& part : p.parts) {
                Graph h = build_pattern(part);
                int off = g.order();
                Graph merged(off + h.order());
                for (int v = 0; v < off; ++v)
                    for (int u : g.neighbors(v))
                        if (u > v) merged.add_edge(v, u);
                for (int v = 0; v < h.order(); ++v)
                    for (int u : h.neighbors(v))
                        if (u > v) merged.add_edge(off + v, off + u);
                g = std::move(merged);
            }
            return g;
        }
        case Tag::Custom:
            return p.custom;
    }
    throw std::logic_error("unreachable");
}

namespace {

// Pattern vertex order: forced anchor first if any, then greedily the vertex
// with the most already-ordered neighbors, ties by decreasing degree then
// index.  Keeps the candidate masks tight from the first extension on.
std::vector<int> matching_order(const Graph& pat, int forced_first) {
    const int k = pat.order();
    std::vector<int> order;
    order.reserve(k);
    VertexSet placed;
    auto pick = [&](bool first) {
        int best = -1, best_link = -1, best_deg = -1;
        for (int v : pat.vertices() - placed) {
            int link = (pat.neighbors(v) & placed).count();
            int deg = pat.degree(v);
            if (first) link = 0;
            if (link > best_link || (link == best_link && deg > best_deg)) {
                best = v;
                best_link = link;
                best_deg = deg;
            }
        }
        return best;
    };
    if (forced_first >= 0) {
        order.push_back(forced_first);
        placed.add(forced_first);
    }
    while (static_cast<int>(order.size()) < k) {
        int v = pick(order.empty());
        order.push_back(v);
        placed.add(v);
    }
    return order;
}

struct EmbedSearch {
    const Graph& host;
    const Graph& pat;
    bool induced;
    std::vector<int> order;   // pattern vertices in matching order
    std::vector<int> image;   // order position -> host vertex
    VertexSet used;

    bool extend(size_t pos, VertexSet first_candidates) {
        if (pos == order.size()) return true;
        int pv = order[pos];
        VertexSet cand = pos == 0 ? first_candidates : host.vertices();
        cand -= used;
        for (size_t q = 0; q < pos; ++q) {
            int qv = order[q];
            if (pat.adjacent(pv, qv))
                cand &= host.neighbors(image[q]);
            else if (induced)
                cand -= host.neighbors(image[q]);
        }
        int need = pat.degree(pv);
        for (int hv : cand) {
            if (host.degree(hv) < need) continue;
            image[pos] = hv;
            used.add(hv);
            if (extend(pos + 1, first_candidates)) return true;
            used.remove(hv);
        }
        return false;
    }
};

std::optional<Embedding> find_embedding(const Graph& g, const Graph& h, bool induced,
                                        int anchor) {
    if (h.order() > g.order()) return std::nullopt;
    if (h.order() == 0) return Embedding{};
    std::vector<int> firsts;
    if (anchor < 0) {
        firsts.push_back(-1);
    } else {
        // anchored: some pattern vertex must land on the anchor
        for (int pv = 0; pv < h.order(); ++pv) firsts.push_back(pv);
    }
    for (int forced : firsts) {
        EmbedSearch s{g, h, induced, matching_order(h, forced), {}, {}};
        s.image.assign(h.order(), -1);
        VertexSet first_cand = anchor < 0 ? g.vertices() : VertexSet::single(anchor);
        if (s.extend(0, first_cand)) {
            Embedding e;
            e.map.assign(h.order(), -1);
            for (size_t pos = 0; pos < s.order.size(); ++pos) e.map[s.order[pos]] = s.image[pos];
            return e;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Embedding> contains_induced(const Graph& g, const Graph& h) {
    return find_embedding(g, h, true, -1);
}

std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h) {
    return find_embedding(g, h, false, -1);
}

std::optional<Embedding> contains_induced_using(const Graph& g, const Graph& h, int v) {
    return find_embedding(g, h, true, v);
}

bool is_free(const Graph& g, const std::vector<PatternName>& patterns) {
    for (const auto& p : patterns)
        if (contains_induced(g, build_pattern(p))) return false;
    return true;
}

namespace {

// path = a, p1, ..., pm; interior adjacency to a would be a chord, so a
// candidate adjacent to a can only close the cycle, never extend the path
bool hole_dfs(const Graph& g, int a, std::vector<int>& path, VertexSet on_path,
              VertexSet interior_forbidden, VertexSet& out) {
    int last = path.back();
    for (int y : g.neighbors(last) - on_path) {
        if (y <= a) continue;
        if (interior_forbidden.contains(y)) continue;
        if (g.adjacent(y, a)) {
            int cycle_len = static_cast<int>(path.size()) + 1;
            if (cycle_len >= 5 && cycle_len % 2 == 1) {
                out = on_path | VertexSet::single(y);
                return true;
            }
            continue;
        }
        path.push_back(y);
        // the old last vertex is interior now; its neighbors would be chords
        VertexSet forb = interior_forbidden | g.neighbors(path[path.size() - 2]);
        if (hole_dfs(g, a, path, on_path | VertexSet::single(y), forb, out)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_odd_hole(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            std::vector<int> path = {a, b};
            VertexSet out;
            if (hole_dfs(g, a, path, VertexSet::single(a) | VertexSet::single(b),
                         VertexSet(), out))
                return out;
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_odd_antihole(const Graph& g) {
    return find_odd_hole(complement(g));
}

bool is_perfect(const Graph& g) {
    return !find_odd_hole(g) && !find_odd_antihole(g);
}

} // namespace critgraph
