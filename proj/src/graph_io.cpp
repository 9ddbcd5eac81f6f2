#include "stablecore/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace stablecore {

namespace {

// Splits one "a b" line into two ints, rejecting trailing junk.
bool parse_int_pair(const std::string& text, long& a, long& b) {
    std::istringstream ss(text);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = 0, m = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!parse_int_pair(line, n, m))
            throw parse_error("expected header 'n m'", line_no);
        break;
    }
    if (line_no == 0 || n < 0 || m < 0)
        throw parse_error("missing or invalid header 'n m'", line_no);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long>(edges.size()) < m) {
        if (!std::getline(in, line))
            throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(edges.size()),
                              line_no);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        long u = 0, v = 0;
        if (!parse_int_pair(line, u, v))
            throw parse_error("expected edge 'u v'", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge endpoint out of range", line_no);
        if (u >= v)
            throw parse_error("edges must satisfy u < v", line_no);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), line_no);
    }
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph graph6_decode(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw parse_error("empty graph6 string", 0);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw parse_error("graph6 string truncated", 0);
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw parse_error("invalid graph6 byte", 0);
        return c - 63;
    };

    long long n = 0;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int a = next();
        if (a < 63) {
            n = (static_cast<long long>(a) << 12) | (next() << 6) | next();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        }
    }
    if (n > 100000) throw parse_error("graph6 order too large", 0);

    std::vector<Edge> edges;
    int bits = 0, value = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            --bits;
            if (value & (1 << bits)) edges.push_back({u, v});
        }
    if (pos != s.size()) throw parse_error("trailing bytes after graph6 data", 0);
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 258047)
        throw std::invalid_argument("graph6 encoder supports n <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int bits = 6, value = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            --bits;
            if (g.has_edge(u, v)) value |= 1 << bits;
            if (bits == 0) {
                out.push_back(static_cast<char>(value + 63));
                bits = 6;
                value = 0;
            }
        }
    if (bits != 6) out.push_back(static_cast<char>(value + 63));
    return out;
}

std::string dot_export(const Graph& g, std::span<const Vertex> core) {
    std::vector<char> filled(g.order(), 0);
    for (Vertex v : core) {
        g.check_vertex(v);
        filled[v] = 1;
    }
    std::string out = "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        const bool pendant = g.degree(v) == 1;
        if (pendant || filled[v]) {
            out += " [";
            if (pendant) out += "shape=box";
            if (pendant && filled[v]) out += ", ";
            if (filled[v]) out += "style=filled";
            out += "]";
        }
        out += ";\n";
    }
    for (const Edge& e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace stablecore
