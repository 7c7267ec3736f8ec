#ifndef CRITGRAPH_GRAPH6_HPP
#define CRITGRAPH_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

// graph6 text format: header byte 63+n for n <= 62, or 126 followed by three
// bytes carrying n in 18 bits (6 bits each, high part first, offset 63).
// Body: upper-triangle adjacency bits in column-major order (column j = 1..n-1,
// rows i = 0..j-1), packed 6 bits per byte high-bit-first, offset 63,
// zero-padded to a byte boundary.  All bytes printable, range 63..126.

struct graph6_error : std::runtime_error {
    explicit graph6_error(const std::string& what) : std::runtime_error(what) {}
};

std::string to_graph6(const Graph& g);

// Throws graph6_error on: malformed header, byte outside 63..126, nonzero
// padding bits, wrong record length, or n > 64.
Graph from_graph6(std::string_view line);

} // namespace critgraph

#endif
