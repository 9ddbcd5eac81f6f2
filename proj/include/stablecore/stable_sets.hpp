#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "stablecore/graph.hpp"

namespace stablecore {

/// Largest order accepted by the exact solver for arbitrary graphs.
inline constexpr int kAlphaExactMaxOrder = 64;

/// Largest order accepted by the subset-enumeration oracles.
inline constexpr int kEnumerationMaxOrder = 24;

/// Vertex subset certified pairwise non-adjacent in its host graph.
/// Construction validates stability; the host is remembered by fingerprint
/// so later operations can reject sets paired with the wrong graph.
class StableSet {
public:
    StableSet(const Graph& host, std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(Vertex v) const;
    std::uint64_t host_fingerprint() const { return host_fingerprint_; }

private:
    std::vector<Vertex> members_;  // sorted, unique
    std::uint64_t host_fingerprint_ = 0;
};

/// Result of enumerating maximum stable sets. When complete, witnesses is
/// exactly the family of all maximum stable sets of the host.
struct OmegaSample {
    int alpha = 0;
    std::vector<StableSet> witnesses;  // lexicographic by member list
    bool complete = false;
};

/// Stability number of an acyclic graph, by in/out dynamic programming over
/// each component. O(n).
int alpha_forest(const Forest& f);

/// One maximum stable set, deterministic: components rooted at their
/// smallest label, ties during backtracking resolved by including the
/// smaller-labeled vertex.
StableSet max_stable_set(const Forest& f);

/// Exact stability number of an arbitrary simple graph (n <= 64).
/// Branch and bound on a maximum-degree vertex after stripping vertices of
/// degree at most one, which are always safe to take.
int alpha_exact(const Graph& g);

/// All maximum stable sets of g (n <= 24), or the first `cap` of them in
/// lexicographic order with complete=false. Transparent subset sweep; this
/// is the oracle the faster routines are checked against.
OmegaSample enumerate_mss(const Graph& g,
                          long long cap = std::numeric_limits<long long>::max());

/// Maximum stable set of t containing the pendant-only stable set a.
/// Exchange procedure: start from max_stable_set(t) and swap each missing
/// pendant of a (in increasing label order) for its unique neighbor.
/// Performs at most |a| swaps.
StableSet extend_pendant_stable_set(const Tree& t, const StableSet& a);

bool is_stable(const Graph& g, std::span<const Vertex> s);

/// Stable and no vertex outside s can be added.
bool is_maximal_stable(const Graph& g, std::span<const Vertex> s);

/// All maximal stable sets of g (n <= 24), optionally only those of a given
/// size, in lexicographic order.
std::vector<StableSet> enumerate_maximal_stable_sets(
    const Graph& g, std::optional<int> size_filter = std::nullopt);

namespace detail {

/// Scratch buffers for the tree dynamic program, reusable across calls so
/// that removal-test loops do not churn the allocator.
struct TreeDpWorkspace {
    std::vector<int> in;
    std::vector<int> out;
    std::vector<int> parent;
    std::vector<Vertex> order;
    std::vector<Vertex> stack;
};

/// alpha of an acyclic graph with one vertex treated as deleted (pass -1 to
/// delete nothing). Input must be acyclic; not re-validated here.
int alpha_acyclic_skipping(const Graph& g, Vertex skipped);
int alpha_acyclic_skipping(const Graph& g, Vertex skipped, TreeDpWorkspace& ws);

}  // namespace detail

}  // namespace stablecore
