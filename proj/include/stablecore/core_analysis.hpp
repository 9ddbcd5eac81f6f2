#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stablecore/graph.hpp"
#include "stablecore/stable_sets.hpp"

namespace stablecore {

/// Intersection of all maximum stable sets, via the removal test:
/// v lies in the core iff alpha(F - v) = alpha(F) - 1. O(n^2).
std::vector<Vertex> core(const Forest& f);

/// True iff adding any single missing edge leaves alpha unchanged
/// (vacuously true when the complement is empty). n <= 64.
bool is_alpha_plus_stable(const Graph& g);

/// Greedy leaf matching: repeatedly match a pendant vertex to its neighbor
/// and delete both. On trees this is exact, and the matching (when it
/// exists) is unique; edges come back sorted.
std::optional<std::vector<Edge>> perfect_matching(const Tree& t);
bool has_perfect_matching(const Tree& t);

/// The three characterizations of strong unique independence, each computed
/// by its own route so they can cross-check one another.
struct StrongUniqueConditions {
    bool unique_mss_with_stable_complement = false;  // |Omega| = 1, V - S stable
    bool pendants_in_one_class = false;              // pend inside one color class
    bool pendant_distances_even = false;             // all pendant pair distances even
    bool all_agree() const {
        return unique_mss_with_stable_complement == pendants_in_one_class &&
               pendants_in_one_class == pendant_distances_even;
    }
};

/// Returns (conjunction of the three conditions, per-condition record).
std::pair<bool, StrongUniqueConditions> is_strong_unique_independence(const Tree& t);

/// Tree obtained by identifying v1 of t1 with v2 of t2, plus the label maps
/// from each operand into the result. The bond keeps t1's labels; t2's other
/// vertices are appended in increasing label order.
struct BondedTree {
    Tree tree;
    std::vector<Vertex> map1;  // t1 label -> bonded label
    std::vector<Vertex> map2;  // t2 label -> bonded label
    Vertex bond_vertex = 0;    // label of the identified vertex in the result
};
BondedTree clique_bond(const Tree& t1, Vertex v1, const Tree& t2, Vertex v2);

/// Division of a tree at an internal vertex v: t1 is v plus everything
/// hanging off neighbor_block, t2 is v plus the rest. The two parts share
/// exactly v and their edge sets partition the tree's edges.
struct BondingSplit {
    Vertex bond_vertex = 0;  // label of v in the parent tree
    Tree t1;
    Tree t2;
    std::vector<Vertex> t1_to_parent;
    std::vector<Vertex> t2_to_parent;
    Vertex bond_in_t1 = 0;
    Vertex bond_in_t2 = 0;
};

/// neighbor_block must be a nonempty proper subset of N(v); the complement
/// within N(v) forms the other block. Rejects pendant v and empty blocks.
BondingSplit split_at(const Tree& t, Vertex v, std::span<const Vertex> neighbor_block);

/// Full structural summary of one tree.
struct CoreReport {
    int n = 0;
    int alpha = 0;
    std::vector<Vertex> core;
    std::vector<Vertex> pend;
    std::vector<Vertex> core_pend;        // core intersect pend
    std::vector<Vertex> max_stable_set;   // one deterministic witness
    bool has_perfect_matching = false;
    bool alpha_plus_stable = false;
    bool strong_unique = false;
    std::pair<int, int> bipartition_sizes{0, 0};
    std::vector<int> core_pend_distance_parities;  // sorted pairwise distances
};

/// Assembles the report and cross-checks the equivalences its fields must
/// satisfy; a violation throws std::logic_error (it can only mean a bug).
CoreReport core_pendant_report(const Tree& t);

/// Stable JSON rendering: fixed key order, sorted vertex lists.
std::string core_report_json(const CoreReport& report);

/// When alpha(t) > n/2: the lexicographically first pair of core-pendant
/// vertices at even distance. Empty when alpha(t) = n/2, or when no such
/// pair exists.
std::optional<std::pair<Vertex, Vertex>> find_even_core_pendant_pair(const Tree& t);

}  // namespace stablecore
