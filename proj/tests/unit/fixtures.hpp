#pragma once

// Hand-built graphs exercising the boundary behaviors: trees whose maximal
// stable sets dodge the pendant vertices, a non-tree where even a maximum
// stable set does, and a tree with exactly two core pendants far apart.

#include "stablecore/graph.hpp"

namespace fixtures {

inline stablecore::Tree path(int n) {
    std::vector<stablecore::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return stablecore::Tree(n, std::move(edges));
}

inline stablecore::Tree star(int leaves) {
    std::vector<stablecore::Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return stablecore::Tree(leaves + 1, std::move(edges));
}

/// Unicyclic graph on 7 vertices whose only pendant vertex (4) is avoided
/// by the maximum stable set {1, 3, 6}: a path 0-1-2-3-4 with a triangle
/// 0-1-5 and a square 1-2-6-5 glued on.
inline stablecore::Graph pendant_free_mss_graph() {
    return stablecore::Graph(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}, {2, 6}, {5, 6}});
}

/// 9-vertex tree where {4, 5} is a maximal stable set containing no pendant
/// vertex and min(|A|, |B|) exceeds its size: hub 5 carries leaves 0,1,2 and
/// inner vertex 3; hub 4 hangs off 3 via 6 and carries leaves 7,8.
inline stablecore::Tree no_pendant_maximal_tree_large() {
    return stablecore::Tree(
        9, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {3, 6}, {4, 6}, {4, 7}, {4, 8}});
}

/// 5-vertex tree where {0, 1} is a maximal stable set containing no pendant
/// vertex and min(|A|, |B|) equals its size.
inline stablecore::Tree no_pendant_maximal_tree_small() {
    return stablecore::Tree(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
}

/// 9-vertex tree with core intersect pend = {0, 3} at distance 6: a long
/// path 3-4-5-6-7-8 and a branch 0-1-2 joined by the edge 2-6.
inline stablecore::Tree two_core_pendants_tree() {
    return stablecore::Tree(
        9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 6}});
}

}  // namespace fixtures
