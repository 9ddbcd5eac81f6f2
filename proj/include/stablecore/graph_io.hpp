#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stablecore/graph.hpp"

namespace stablecore {

/// Malformed textual input; line is 1-based, or 0 when not line-oriented.
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& what, int line_number)
        : std::runtime_error(line_number > 0
                                 ? "line " + std::to_string(line_number) + ": " + what
                                 : what),
          line(line_number) {}
};

/// Edge-list text: first line "n m", then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Canonical edge-list form: edges sorted ascending, newline-terminated.
std::string write_edge_list(const Graph& g);

/// graph6 codec, bit-exact per the published format definition
/// (upper triangle column-major, 6-bit groups offset by 63).
/// An optional ">>graph6<<" header is accepted on input.
Graph graph6_decode(std::string_view s);
std::string graph6_encode(const Graph& g);

/// DOT export. Pendant vertices get shape=box; vertices listed in `core`
/// (from a CoreReport, when available) get style=filled.
std::string dot_export(const Graph& g, std::span<const Vertex> core = {});

}  // namespace stablecore
