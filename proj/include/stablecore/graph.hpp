#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace stablecore {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order; rejects self-loops.
Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction; all queries are const and safe to call
/// concurrently. Construction rejects self-loops, duplicate edges and
/// out-of-range endpoints.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;

    bool is_connected() const;
    bool is_acyclic() const;
    int component_count() const;

    /// Stable 64-bit digest of (order, edge set); used to pair vertex sets
    /// with the graph they were certified against.
    std::uint64_t fingerprint() const { return fingerprint_; }

    /// Copy of this graph with one extra edge.
    Graph with_edge(Vertex a, Vertex b) const;

    void check_vertex(Vertex v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;       // sorted, unique
    std::vector<int> adj_start_;    // CSR offsets, size n+1
    std::vector<Vertex> adj_;       // sorted per vertex
    std::uint64_t fingerprint_ = 0;
};

/// Connected acyclic graph of order at least two.
class Tree {
public:
    explicit Tree(Graph g);
    Tree(int n, std::vector<Edge> edges) : Tree(Graph(n, std::move(edges))) {}

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }
    std::span<const Vertex> neighbors(Vertex v) const { return g_.neighbors(v); }
    int degree(Vertex v) const { return g_.degree(v); }
    bool has_edge(Vertex a, Vertex b) const { return g_.has_edge(a, b); }
    const std::vector<Edge>& edges() const { return g_.edges(); }

private:
    Graph g_;
};

/// Acyclic graph: disjoint union of trees and isolated vertices.
class Forest {
public:
    explicit Forest(Graph g);
    Forest(const Tree& t) : g_(t.graph()) {}

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }

private:
    Graph g_;
};

/// Color classes of a connected bipartite graph; the class containing
/// vertex 0 is class_a. Both lists are sorted.
struct Bipartition {
    std::vector<Vertex> class_a;
    std::vector<Vertex> class_b;
};

/// Vertices of degree exactly one, sorted.
std::vector<Vertex> pendant_vertices(const Graph& g);

/// BFS 2-coloring from vertex 0.
Bipartition bipartition(const Tree& t);

/// Length of the unique u-v path.
int distance(const Tree& t, Vertex u, Vertex v);

/// Tree on 2k+1 vertices: hub 0 with k legs of length two. Leg i is the
/// path 0 - i - (i+k), so the inner vertices are 1..k and the outer leaves
/// are k+1..2k.
Tree spider(int k);

/// The unique labeled tree on seq.size()+2 vertices with this Prufer
/// sequence.
Tree prufer_decode(std::span<const int> seq);

std::vector<int> prufer_encode(const Tree& t);

/// Uniform random labeled tree, drawn via a random Prufer sequence.
/// Deterministic for a fixed seed: digits are mt19937_64(seed) reduced
/// modulo n.
Tree random_tree(int n, std::uint64_t seed);

/// Number of labeled trees on n vertices (Cayley: n^(n-2)); n <= 15.
long long labeled_tree_count(int n);

/// index-th labeled tree on n vertices, 0 <= index < labeled_tree_count(n),
/// ordered by Prufer sequence read as a base-n number.
Tree labeled_tree_by_index(int n, long long index);

/// Induced subgraph with compacted labels plus the relabeling in both
/// directions (from_original[v] == -1 for removed vertices).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;
    std::vector<Vertex> from_original;
};

/// Subgraph induced on V minus w.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> w);

struct GraphComponent {
    Graph graph;
    std::vector<Vertex> to_original;
};

/// Maximal connected induced subgraphs, ordered by minimum original label.
std::vector<GraphComponent> connected_components(const Graph& g);

}  // namespace stablecore
