#include "stablecore/stable_sets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace stablecore {

namespace {

// In/out dynamic program over a rooted forest, iterative so that deep paths
// cannot overflow the stack. If witness != nullptr it is filled with the
// deterministic maximum stable set (ties prefer inclusion).
int forest_dp(const Graph& g, Vertex skipped, std::vector<Vertex>* witness,
              detail::TreeDpWorkspace& ws) {
    const int n = g.order();
    ws.in.assign(n, 0);
    ws.out.assign(n, 0);
    ws.parent.assign(n, -2);
    ws.order.clear();
    ws.order.reserve(n);
    ws.stack.clear();

    for (Vertex root = 0; root < n; ++root) {
        if (ws.parent[root] != -2 || root == skipped) continue;
        ws.parent[root] = -1;
        ws.stack.push_back(root);
        while (!ws.stack.empty()) {
            Vertex v = ws.stack.back();
            ws.stack.pop_back();
            ws.order.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (w != skipped && ws.parent[w] == -2) {
                    ws.parent[w] = v;
                    ws.stack.push_back(w);
                }
        }
    }

    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        Vertex v = *it;
        ws.in[v] += 1;
        if (ws.parent[v] >= 0) {
            ws.in[ws.parent[v]] += ws.out[v];
            ws.out[ws.parent[v]] += std::max(ws.in[v], ws.out[v]);
        }
    }

    int alpha = 0;
    for (Vertex v : ws.order)
        if (ws.parent[v] == -1) alpha += std::max(ws.in[v], ws.out[v]);

    if (witness) {
        witness->clear();
        std::vector<char> taken(n, 0);
        for (Vertex v : ws.order) {
            const bool parent_taken = ws.parent[v] >= 0 && taken[ws.parent[v]];
            if (!parent_taken && ws.in[v] >= ws.out[v]) {
                taken[v] = 1;
                witness->push_back(v);
            }
        }
        std::sort(witness->begin(), witness->end());
    }
    return alpha;
}

int forest_dp(const Graph& g, Vertex skipped, std::vector<Vertex>* witness) {
    detail::TreeDpWorkspace ws;
    return forest_dp(g, skipped, witness, ws);
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Adjacency bitmasks for the exact solver and the enumeration oracles.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    return adj;
}

int alpha_masked(const std::vector<std::uint64_t>& adj, std::uint64_t remaining) {
    int taken = 0;
    // Vertices of degree <= 1 in the remaining graph are always safe to take.
    bool reduced = true;
    while (reduced) {
        reduced = false;
        std::uint64_t scan = remaining;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (!(remaining & bit(v))) continue;  // removed earlier in this pass
            const std::uint64_t nb = adj[v] & remaining;
            const int deg = std::popcount(nb);
            if (deg == 0) {
                ++taken;
                remaining &= ~bit(v);
            } else if (deg == 1) {
                ++taken;
                remaining &= ~(bit(v) | nb);
                reduced = true;
            }
        }
    }
    if (!remaining) return taken;

    int best_v = -1, best_deg = -1;
    std::uint64_t scan = remaining;
    while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        const int deg = std::popcount(adj[v] & remaining);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    const int with_v = 1 + alpha_masked(adj, remaining & ~(bit(best_v) | adj[best_v]));
    const int without_v = alpha_masked(adj, remaining & ~bit(best_v));
    return taken + std::max(with_v, without_v);
}

bool mask_stable(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    std::uint64_t scan = mask;
    while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (adj[v] & mask) return false;
    }
    return true;
}

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

bool member_list_less(const StableSet& a, const StableSet& b) {
    return a.members() < b.members();
}

}  // namespace

StableSet::StableSet(const Graph& host, std::vector<Vertex> members)
    : members_(std::move(members)), host_fingerprint_(host.fingerprint()) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("duplicate vertex in stable set");
    for (Vertex v : members_) host.check_vertex(v);
    if (!is_stable(host, members_))
        throw std::invalid_argument("vertex set is not stable in its host graph");
}

bool StableSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

int alpha_forest(const Forest& f) { return forest_dp(f.graph(), -1, nullptr); }

StableSet max_stable_set(const Forest& f) {
    std::vector<Vertex> witness;
    forest_dp(f.graph(), -1, &witness);
    return StableSet(f.graph(), std::move(witness));
}

int detail::alpha_acyclic_skipping(const Graph& g, Vertex skipped) {
    return forest_dp(g, skipped, nullptr);
}

int detail::alpha_acyclic_skipping(const Graph& g, Vertex skipped,
                                   detail::TreeDpWorkspace& ws) {
    return forest_dp(g, skipped, nullptr, ws);
}

int alpha_exact(const Graph& g) {
    if (g.order() > kAlphaExactMaxOrder)
        throw std::invalid_argument("alpha_exact supports n <= " +
                                    std::to_string(kAlphaExactMaxOrder));
    if (g.order() == 0) return 0;
    const auto adj = adjacency_masks(g);
    const std::uint64_t all =
        g.order() == 64 ? ~std::uint64_t{0} : (bit(g.order()) - 1);
    return alpha_masked(adj, all);
}

OmegaSample enumerate_mss(const Graph& g, long long cap) {
    if (g.order() > kEnumerationMaxOrder)
        throw std::invalid_argument("enumerate_mss supports n <= " +
                                    std::to_string(kEnumerationMaxOrder));
    OmegaSample sample;
    sample.alpha = alpha_exact(g);
    const auto adj = adjacency_masks(g);
    for (std::uint64_t mask = 0; mask < bit(g.order()); ++mask) {
        if (std::popcount(mask) != sample.alpha) continue;
        if (!mask_stable(adj, mask)) continue;
        sample.witnesses.emplace_back(g, mask_to_vertices(mask));
    }
    std::sort(sample.witnesses.begin(), sample.witnesses.end(), member_list_less);
    sample.complete = static_cast<long long>(sample.witnesses.size()) <= cap;
    if (!sample.complete)
        sample.witnesses.erase(sample.witnesses.begin() + static_cast<long>(cap),
                               sample.witnesses.end());
    return sample;
}

StableSet extend_pendant_stable_set(const Tree& t, const StableSet& a) {
    const Graph& g = t.graph();
    if (a.host_fingerprint() != g.fingerprint())
        throw std::invalid_argument("stable set was certified against a different graph");
    for (Vertex v : a.members())
        if (g.degree(v) != 1)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is not pendant");

    StableSet start = max_stable_set(Forest(t));
    std::vector<char> in_set(g.order(), 0);
    for (Vertex v : start.members()) in_set[v] = 1;

    int swaps = 0;
    for (Vertex u : a.members()) {
        if (in_set[u]) continue;
        const Vertex w = g.neighbors(u)[0];
        // u is missing from a maximum stable set, so its only neighbor must
        // be inside it; otherwise the set could be grown.
        if (!in_set[w])
            throw std::logic_error("exchange step found no conflicting neighbor");
        in_set[w] = 0;
        in_set[u] = 1;
        ++swaps;
    }
    if (swaps > a.size())
        throw std::logic_error("exchange procedure exceeded |a| swaps");

    std::vector<Vertex> members;
    members.reserve(start.size());
    for (Vertex v = 0; v < g.order(); ++v)
        if (in_set[v]) members.push_back(v);
    StableSet result(g, std::move(members));
    if (result.size() != start.size())
        throw std::logic_error("exchange procedure changed the set size");
    return result;
}

bool is_stable(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : s) {
        g.check_vertex(v);
        mark[v] = 1;
    }
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (mark[w]) return false;
    return true;
}

bool is_maximal_stable(const Graph& g, std::span<const Vertex> s) {
    if (!is_stable(g, s)) return false;
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : s) mark[v] = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mark[v]) continue;
        bool dominated = false;
        for (Vertex w : g.neighbors(v))
            if (mark[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

std::vector<StableSet> enumerate_maximal_stable_sets(const Graph& g,
                                                     std::optional<int> size_filter) {
    if (g.order() > kEnumerationMaxOrder)
        throw std::invalid_argument("enumerate_maximal_stable_sets supports n <= " +
                                    std::to_string(kEnumerationMaxOrder));
    const auto adj = adjacency_masks(g);
    const std::uint64_t limit = bit(g.order());
    std::vector<StableSet> out;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (size_filter && std::popcount(mask) != *size_filter) continue;
        if (!mask_stable(adj, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
            if (!(mask & bit(v)) && !(adj[v] & mask)) maximal = false;
        if (!maximal) continue;
        out.emplace_back(g, mask_to_vertices(mask));
    }
    std::sort(out.begin(), out.end(), member_list_less);
    return out;
}

}  // namespace stablecore
