#include "stablecore/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace stablecore {

namespace {

std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        hash ^= (value >> (8 * i)) & 0xff;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (Edge& e : edges_) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(e.u) + " " + std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    adj_start_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_start_[e.u + 1];
        ++adj_start_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_.resize(2 * edges_.size());
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[fill[e.u]++] = e.v;
        adj_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_start_[v], adj_.begin() + adj_start_[v + 1]);

    std::uint64_t h = fnv1a(0xcbf29ce484222325ull, static_cast<std::uint64_t>(n_));
    for (const Edge& e : edges_)
        h = fnv1a(h, (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v));
    fingerprint_ = h;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_.data() + adj_start_[v],
            static_cast<std::size_t>(adj_start_[v + 1] - adj_start_[v])};
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return adj_start_[v + 1] - adj_start_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::component_count() const {
    int components = 0;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

bool Graph::is_connected() const { return component_count() <= 1; }

bool Graph::is_acyclic() const {
    // For a simple graph: acyclic iff m = n - #components.
    return edge_count() == n_ - component_count();
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    check_vertex(e.u);
    check_vertex(e.v);
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

Tree::Tree(Graph g) : g_(std::move(g)) {
    if (g_.order() < 2)
        throw std::invalid_argument("tree requires order >= 2");
    if (g_.edge_count() != g_.order() - 1)
        throw std::invalid_argument("tree requires exactly n-1 edges");
    if (!g_.is_connected())
        throw std::invalid_argument("tree must be connected");
}

Forest::Forest(Graph g) : g_(std::move(g)) {
    if (!g_.is_acyclic())
        throw std::invalid_argument("forest must be acyclic");
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
    std::vector<Vertex> pend;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) pend.push_back(v);
    return pend;
}

Bipartition bipartition(const Tree& t) {
    const Graph& g = t.graph();
    std::vector<int> color(g.order(), -1);
    std::queue<Vertex> queue;
    color[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push(w);
            }
    }
    Bipartition bip;
    for (Vertex v = 0; v < g.order(); ++v)
        (color[v] == 0 ? bip.class_a : bip.class_b).push_back(v);
    return bip;
}

int distance(const Tree& t, Vertex u, Vertex v) {
    const Graph& g = t.graph();
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> queue;
    dist[u] = 0;
    queue.push(u);
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(x)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[x] + 1;
            if (w == v) return dist[w];
            queue.push(w);
        }
    }
    throw std::logic_error("tree is disconnected");  // unreachable for a valid Tree
}

Tree spider(int k) {
    if (k < 1) throw std::invalid_argument("spider requires k >= 1");
    std::vector<Edge> edges;
    edges.reserve(2 * k);
    for (int i = 1; i <= k; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i + k});
    }
    return Tree(2 * k + 1, std::move(edges));
}

Tree prufer_decode(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    for (int x : seq)
        if (x < 0 || x >= n)
            throw std::invalid_argument("Prufer entry out of range: " + std::to_string(x));

    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];

    // Classic linear-time decode: a moving pointer tracks the smallest
    // available leaf; the final edge always attaches to vertex n-1.
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.push_back(make_edge(leaf, x));
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back(make_edge(leaf, n - 1));
    return Tree(n, std::move(edges));
}

std::vector<int> prufer_encode(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    // Mirror of the decoder: repeatedly strip the smallest leaf and record
    // its neighbor. Removed vertices are marked by degree 0.
    std::vector<int> seq;
    seq.reserve(n - 2);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < n - 2; ++step) {
        int parent = -1;
        for (Vertex w : g.neighbors(leaf))
            if (degree[w] > 0) {
                parent = w;
                break;
            }
        seq.push_back(parent);
        degree[leaf] = 0;
        if (--degree[parent] == 1 && parent < ptr) {
            leaf = parent;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_tree requires n >= 2");
    std::mt19937_64 eng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    return prufer_decode(seq);
}

long long labeled_tree_count(int n) {
    if (n < 2 || n > 15)
        throw std::invalid_argument("labeled_tree_count supports 2 <= n <= 15");
    long long count = 1;
    for (int i = 0; i < n - 2; ++i) count *= n;
    return count;
}

Tree labeled_tree_by_index(int n, long long index) {
    if (index < 0 || index >= labeled_tree_count(n))
        throw std::invalid_argument("labeled tree index out of range");
    std::vector<int> seq(n - 2);
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<int>(index % n);
        index /= n;
    }
    return prufer_decode(seq);
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> w) {
    std::vector<char> removed(g.order(), 0);
    for (Vertex v : w) {
        g.check_vertex(v);
        removed[v] = 1;
    }
    InducedSubgraph out{Graph(0, {}), {}, std::vector<Vertex>(g.order(), -1)};
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[v]) {
            out.from_original[v] = static_cast<Vertex>(out.to_original.size());
            out.to_original.push_back(v);
        }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!removed[e.u] && !removed[e.v])
            edges.push_back({out.from_original[e.u], out.from_original[e.v]});
    out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

std::vector<GraphComponent> connected_components(const Graph& g) {
    std::vector<int> label(g.order(), -1);
    int components = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] >= 0) continue;
        int id = components++;
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
    }
    std::vector<GraphComponent> out;
    out.reserve(components);
    std::vector<Vertex> from_original(g.order(), -1);
    for (int id = 0; id < components; ++id) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.order(); ++v)
            if (label[v] == id) {
                from_original[v] = static_cast<Vertex>(members.size());
                members.push_back(v);
            }
        std::vector<Edge> edges;
        for (const Edge& e : g.edges())
            if (label[e.u] == id)
                edges.push_back({from_original[e.u], from_original[e.v]});
        out.push_back({Graph(static_cast<int>(members.size()), std::move(edges)),
                       std::move(members)});
    }
    return out;
}

}  // namespace stablecore
