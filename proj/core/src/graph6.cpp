#include "critgraph/graph6.hpp"

namespace critgraph {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kOffset + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kOffset + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw graph6_error("empty record");
    for (char c : line) {
        int b = static_cast<unsigned char>(c);
        if (b < kOffset || b > kMaxByte)
            throw graph6_error("byte outside printable range 63..126");
    }
    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(line[0]) == kMaxByte) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == kMaxByte)
            throw graph6_error("order exceeds 64");
        if (line.size() < 4) throw graph6_error("truncated extended header");
        n = (static_cast<long>(line[1] - kOffset) << 12) |
            (static_cast<long>(line[2] - kOffset) << 6) |
            static_cast<long>(line[3] - kOffset);
        pos = 4;
    } else {
        n = line[0] - kOffset;
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw graph6_error("order exceeds 64");

    const long nbits = n * (n - 1) / 2;
    const size_t body = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != body)
        throw graph6_error("record length does not match order");

    Graph g(static_cast<int>(n));
    long bit = 0;
    int i = 0, j = 1;
    for (size_t k = pos; k < line.size(); ++k) {
        int val = line[k] - kOffset;
        for (int s = 5; s >= 0; --s, ++bit) {
            int b = (val >> s) & 1;
            if (bit < nbits) {
                if (b) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (b) {
                throw graph6_error("nonzero padding bits");
            }
        }
    }
    return g;
}

} // namespace critgraph
