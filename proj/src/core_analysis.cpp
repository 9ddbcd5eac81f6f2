#include "stablecore/core_analysis.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace stablecore {

namespace {

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<Vertex> core(const Forest& f) {
    const Graph& g = f.graph();
    detail::TreeDpWorkspace ws;
    const int alpha = detail::alpha_acyclic_skipping(g, -1, ws);
    std::vector<Vertex> result;
    for (Vertex v = 0; v < g.order(); ++v)
        if (detail::alpha_acyclic_skipping(g, v, ws) == alpha - 1) result.push_back(v);
    return result;
}

bool is_alpha_plus_stable(const Graph& g) {
    if (g.order() > kAlphaExactMaxOrder)
        throw std::invalid_argument("is_alpha_plus_stable supports n <= " +
                                    std::to_string(kAlphaExactMaxOrder));
    const int alpha = alpha_exact(g);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            if (alpha_exact(g.with_edge(u, v)) != alpha) return false;
        }
    return true;
}

std::optional<std::vector<Edge>> perfect_matching(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    if (n % 2 != 0) return std::nullopt;

    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    std::queue<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] == 1) leaves.push(v);
    }

    std::vector<Edge> matching;
    while (!leaves.empty()) {
        Vertex u = leaves.front();
        leaves.pop();
        if (removed[u] || degree[u] != 1) continue;
        Vertex partner = -1;
        for (Vertex w : g.neighbors(u))
            if (!removed[w]) {
                partner = w;
                break;
            }
        matching.push_back(make_edge(u, partner));
        removed[u] = removed[partner] = 1;
        for (Vertex w : g.neighbors(partner)) {
            if (removed[w]) continue;
            if (--degree[w] == 1) leaves.push(w);
        }
    }
    if (static_cast<int>(matching.size()) * 2 != n) return std::nullopt;
    std::sort(matching.begin(), matching.end());
    return matching;
}

bool has_perfect_matching(const Tree& t) { return perfect_matching(t).has_value(); }

std::pair<bool, StrongUniqueConditions> is_strong_unique_independence(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    StrongUniqueConditions cond;

    const std::vector<Vertex> pend = pendant_vertices(g);
    const Bipartition bip = bipartition(t);

    // (ii) all pendants inside one color class.
    cond.pendants_in_one_class =
        std::includes(bip.class_a.begin(), bip.class_a.end(), pend.begin(), pend.end()) ||
        std::includes(bip.class_b.begin(), bip.class_b.end(), pend.begin(), pend.end());

    // (iii) all pairwise pendant distances even, measured by BFS so the check
    // does not lean on the coloring used for (ii).
    cond.pendant_distances_even = true;
    for (std::size_t i = 0; i + 1 < pend.size() && cond.pendant_distances_even; ++i) {
        const std::vector<int> dist = bfs_distances(g, pend[i]);
        for (std::size_t j = i + 1; j < pend.size(); ++j)
            if (dist[pend[j]] % 2 != 0) {
                cond.pendant_distances_even = false;
                break;
            }
    }

    // (i) a unique maximum stable set whose complement is also stable. The
    // core equals the unique maximum stable set exactly when |Omega| = 1.
    const std::vector<Vertex> core_set = core(Forest(t));
    const int alpha = alpha_forest(Forest(t));
    std::vector<Vertex> complement;
    {
        std::vector<char> in_core(n, 0);
        for (Vertex v : core_set) in_core[v] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (!in_core[v]) complement.push_back(v);
    }
    cond.unique_mss_with_stable_complement =
        static_cast<int>(core_set.size()) == alpha && is_stable(g, complement);

    if (n <= kEnumerationMaxOrder) {
        const OmegaSample omega = enumerate_mss(g);
        bool direct = omega.witnesses.size() == 1;
        if (direct) {
            std::vector<Vertex> rest;
            std::vector<char> in_set(n, 0);
            for (Vertex v : omega.witnesses.front().members()) in_set[v] = 1;
            for (Vertex v = 0; v < n; ++v)
                if (!in_set[v]) rest.push_back(v);
            direct = is_stable(g, rest);
        }
        if (direct != cond.unique_mss_with_stable_complement)
            throw std::logic_error(
                "strong-unique check: enumeration and core routes disagree");
    }

    const bool value = cond.unique_mss_with_stable_complement &&
                       cond.pendants_in_one_class && cond.pendant_distances_even;
    return {value, cond};
}

BondedTree clique_bond(const Tree& t1, Vertex v1, const Tree& t2, Vertex v2) {
    const Graph& g1 = t1.graph();
    const Graph& g2 = t2.graph();
    g1.check_vertex(v1);
    g2.check_vertex(v2);

    const int n1 = g1.order();
    std::vector<Vertex> map1(n1);
    for (Vertex v = 0; v < n1; ++v) map1[v] = v;

    std::vector<Vertex> map2(g2.order());
    Vertex next = n1;
    for (Vertex v = 0; v < g2.order(); ++v)
        map2[v] = (v == v2) ? v1 : next++;

    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges())
        edges.push_back(make_edge(map2[e.u], map2[e.v]));
    return BondedTree{Tree(n1 + g2.order() - 1, std::move(edges)),
                      std::move(map1), std::move(map2), v1};
}

BondingSplit split_at(const Tree& t, Vertex v, std::span<const Vertex> neighbor_block) {
    const Graph& g = t.graph();
    g.check_vertex(v);
    const auto nbhd = g.neighbors(v);
    if (nbhd.size() < 2)
        throw std::invalid_argument("split_at requires deg(v) >= 2");
    if (neighbor_block.empty())
        throw std::invalid_argument("split_at requires a nonempty neighbor block");
    std::vector<char> in_block(g.order(), 0);
    for (Vertex w : neighbor_block) {
        if (!g.has_edge(v, w))
            throw std::invalid_argument("neighbor block contains a non-neighbor of v");
        in_block[w] = 1;
    }
    if (std::count(in_block.begin(), in_block.end(), char(1)) ==
        static_cast<long>(nbhd.size()))
        throw std::invalid_argument("the complementary neighbor block is empty");

    // Flood from the block side with v removed; side 1 is that region plus v.
    std::vector<char> side1(g.order(), 0);
    std::vector<Vertex> stack;
    for (Vertex w : nbhd)
        if (in_block[w]) {
            side1[w] = 1;
            stack.push_back(w);
        }
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (y != v && !side1[y]) {
                side1[y] = 1;
                stack.push_back(y);
            }
    }
    side1[v] = 1;

    std::vector<Vertex> part1, part2;
    for (Vertex x = 0; x < g.order(); ++x)
        (side1[x] ? part1 : part2).push_back(x);
    part2.push_back(v);
    std::sort(part2.begin(), part2.end());

    // Edges at v itself must go to the side their other endpoint belongs to;
    // the membership arrays alone cannot tell because v sits in both parts.
    std::vector<Vertex> from1(g.order(), -1), from2(g.order(), -1);
    for (std::size_t i = 0; i < part1.size(); ++i) from1[part1[i]] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < part2.size(); ++i) from2[part2[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges1, edges2;
    for (const Edge& e : g.edges()) {
        const Vertex other = (e.u == v) ? e.v : (e.v == v ? e.u : -1);
        if (other >= 0) {
            if (side1[other])
                edges1.push_back(make_edge(from1[e.u], from1[e.v]));
            else
                edges2.push_back(make_edge(from2[e.u], from2[e.v]));
        } else if (side1[e.u]) {
            edges1.push_back({from1[e.u], from1[e.v]});
        } else {
            edges2.push_back({from2[e.u], from2[e.v]});
        }
    }

    BondingSplit split{v,
                       Tree(static_cast<int>(part1.size()), std::move(edges1)),
                       Tree(static_cast<int>(part2.size()), std::move(edges2)),
                       std::move(part1),
                       std::move(part2),
                       0,
                       0};
    split.bond_in_t1 = from1[v];
    split.bond_in_t2 = from2[v];
    return split;
}

CoreReport core_pendant_report(const Tree& t) {
    const Graph& g = t.graph();
    CoreReport r;
    r.n = g.order();
    r.alpha = alpha_forest(Forest(t));
    r.core = core(Forest(t));
    r.pend = pendant_vertices(g);
    r.core_pend = sorted_intersection(r.core, r.pend);
    r.max_stable_set = max_stable_set(Forest(t)).members();
    r.has_perfect_matching = perfect_matching(t).has_value();
    // Beyond the exact solver's reach the characterization through the core
    // carries the field; at small orders the direct edge-addition check runs
    // and is validated against it below.
    r.alpha_plus_stable = g.order() <= kAlphaExactMaxOrder
                              ? is_alpha_plus_stable(g)
                              : r.core.empty();
    r.strong_unique = is_strong_unique_independence(t).first;
    const Bipartition bip = bipartition(t);
    r.bipartition_sizes = {static_cast<int>(bip.class_a.size()),
                           static_cast<int>(bip.class_b.size())};
    for (std::size_t i = 0; i < r.core_pend.size(); ++i) {
        const std::vector<int> dist = bfs_distances(g, r.core_pend[i]);
        for (std::size_t j = i + 1; j < r.core_pend.size(); ++j)
            r.core_pend_distance_parities.push_back(dist[r.core_pend[j]]);
    }
    std::sort(r.core_pend_distance_parities.begin(),
              r.core_pend_distance_parities.end());

    // Consistency gates; all of these are equivalences between independently
    // computed fields, so a violation is an implementation bug.
    const bool alpha_large = 2 * r.alpha > r.n;
    if (alpha_large == r.has_perfect_matching)
        throw std::logic_error("core report inconsistency: alpha vs matching");
    if (alpha_large != !r.core.empty())
        throw std::logic_error("core report inconsistency: alpha vs core");
    if (alpha_large != (r.core_pend.size() >= 2))
        throw std::logic_error("core report inconsistency: alpha vs core-pendants");
    if (r.core.size() == 1)
        throw std::logic_error("core report inconsistency: singleton core on a tree");
    if (g.order() <= kAlphaExactMaxOrder &&
        r.alpha_plus_stable != r.core.empty())
        throw std::logic_error("core report inconsistency: alpha-plus vs core");
    for (Vertex v : r.core)
        if (!std::binary_search(r.max_stable_set.begin(), r.max_stable_set.end(), v))
            throw std::logic_error("core report inconsistency: core outside witness");
    return r;
}

std::string core_report_json(const CoreReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["core"] = r.core;
    j["pend"] = r.pend;
    j["core_pend"] = r.core_pend;
    j["max_stable_set"] = {{"alpha", r.max_stable_set.size()},
                           {"members", r.max_stable_set}};
    j["has_perfect_matching"] = r.has_perfect_matching;
    j["alpha_plus_stable"] = r.alpha_plus_stable;
    j["strong_unique"] = r.strong_unique;
    j["bipartition_sizes"] = {r.bipartition_sizes.first, r.bipartition_sizes.second};
    j["core_pend_distance_parities"] = r.core_pend_distance_parities;
    return j.dump(2) + "\n";
}

std::optional<std::pair<Vertex, Vertex>> find_even_core_pendant_pair(const Tree& t) {
    const Graph& g = t.graph();
    const int alpha = alpha_forest(Forest(t));
    if (2 * alpha <= g.order()) return std::nullopt;
    const std::vector<Vertex> cp =
        sorted_intersection(core(Forest(t)), pendant_vertices(g));
    for (std::size_t i = 0; i < cp.size(); ++i) {
        const std::vector<int> dist = bfs_distances(g, cp[i]);
        for (std::size_t j = i + 1; j < cp.size(); ++j)
            if (dist[cp[j]] % 2 == 0) return std::pair{cp[i], cp[j]};
    }
    return std::nullopt;
}

}  // namespace stablecore
