#include "stablecore/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "stablecore/core_analysis.hpp"
#include "stablecore/graph_io.hpp"
#include "stablecore/stable_sets.hpp"

namespace stablecore {

namespace {

struct TheoremInfo {
    TheoremId id;
    std::string_view name;
    bool needs_enumeration;
    int max_order;
};

constexpr int kNoCap = std::numeric_limits<int>::max();

constexpr std::array<TheoremInfo, 16> kTheoremInfo = {{
    {TheoremId::th4, "th4", true, kAllStableSetsMaxOrder},
    {TheoremId::cor8, "cor8", true, kEnumerationMaxOrder},
    {TheoremId::cor4, "cor4", false, kNoCap},
    {TheoremId::cor5, "cor5", false, kNoCap},
    {TheoremId::prop6, "prop6", false, kNoCap},
    {TheoremId::cor1, "cor1", true, kEnumerationMaxOrder},
    {TheoremId::th1th2, "th1th2", true, kEnumerationMaxOrder},
    {TheoremId::prop4cor3, "prop4cor3", false, kNoCap},
    {TheoremId::lem3, "lem3", false, kNoCap},
    {TheoremId::prop5, "prop5", false, kNoCap},
    {TheoremId::lem4, "lem4", false, kNoCap},
    {TheoremId::th6, "th6", false, kNoCap},
    {TheoremId::deg2k, "deg2k", false, kNoCap},
    {TheoremId::th7, "th7", false, kNoCap},
    {TheoremId::even_dist, "even_dist", false, kNoCap},
    {TheoremId::berge_pend, "berge_pend", false, kNoCap},
}};

const TheoremInfo& info(TheoremId id) {
    for (const TheoremInfo& t : kTheoremInfo)
        if (t.id == id) return t;
    throw std::logic_error("unknown theorem id");
}

std::string vertex_set_string(std::span<const Vertex> vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

// Lazily computed per-tree facts shared by the checkers, so that a sweep
// evaluating several theorems on one tree does each computation once.
class TreeAnalysis {
public:
    explicit TreeAnalysis(const Tree& t) : t_(t), g_(t.graph()) {}

    const Tree& tree() const { return t_; }
    const Graph& g() const { return g_; }
    int n() const { return g_.order(); }

    const std::vector<Vertex>& pend() {
        if (!pend_) pend_ = pendant_vertices(g_);
        return *pend_;
    }

    const Bipartition& bip() {
        if (!bip_) bip_ = bipartition(t_);
        return *bip_;
    }

    int alpha() {
        if (alpha_ < 0) alpha_ = alpha_forest(Forest(t_));
        return alpha_;
    }

    const std::vector<Vertex>& core_set() {
        if (!core_) core_ = core(Forest(t_));
        return *core_;
    }

    bool in_core(Vertex v) {
        const auto& c = core_set();
        return std::binary_search(c.begin(), c.end(), v);
    }

    const std::vector<Vertex>& core_pend() {
        if (!core_pend_) {
            core_pend_.emplace();
            std::set_intersection(core_set().begin(), core_set().end(),
                                  pend().begin(), pend().end(),
                                  std::back_inserter(*core_pend_));
        }
        return *core_pend_;
    }

    bool pm_exists() {
        if (pm_ < 0) pm_ = perfect_matching(t_).has_value() ? 1 : 0;
        return pm_ == 1;
    }

    const OmegaSample& omega() {
        if (!omega_) omega_ = enumerate_mss(g_);
        return *omega_;
    }

    std::vector<int> distances_from(Vertex v) const {
        std::vector<int> dist(g_.order(), -1);
        std::queue<Vertex> queue;
        dist[v] = 0;
        queue.push(v);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex w : g_.neighbors(x))
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    queue.push(w);
                }
        }
        return dist;
    }

    struct SplitFacts {
        Vertex v = 0;
        bool v_in_core_parent = false;
        int alpha1 = 0;
        int alpha2 = 0;
        bool v_in_core1 = false;
        bool v_in_core2 = false;
        // core(T1) u core(T2) in parent labels; only needed (and only
        // computed) when v lies in the parent core.
        std::vector<Vertex> core_union_parent;
    };

    // One canonical split per internal vertex: the smallest-labeled neighbor
    // against the rest. Bond-vertex core membership uses a single removal
    // test per side; the full side cores are the expensive part, so they are
    // computed only where a checker can use them.
    const std::vector<SplitFacts>& splits() {
        if (splits_) return *splits_;
        splits_.emplace();
        detail::TreeDpWorkspace ws;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (g_.degree(v) < 2) continue;
            const Vertex block[1] = {g_.neighbors(v)[0]};
            const BondingSplit s = split_at(t_, v, block);
            SplitFacts f;
            f.v = v;
            f.v_in_core_parent = in_core(v);
            f.alpha1 = detail::alpha_acyclic_skipping(s.t1.graph(), -1, ws);
            f.alpha2 = detail::alpha_acyclic_skipping(s.t2.graph(), -1, ws);
            f.v_in_core1 =
                detail::alpha_acyclic_skipping(s.t1.graph(), s.bond_in_t1, ws) ==
                f.alpha1 - 1;
            f.v_in_core2 =
                detail::alpha_acyclic_skipping(s.t2.graph(), s.bond_in_t2, ws) ==
                f.alpha2 - 1;
            if (f.v_in_core_parent) {
                const std::vector<Vertex> core1 = core(Forest(s.t1));
                const std::vector<Vertex> core2 = core(Forest(s.t2));
                for (Vertex x : core1) f.core_union_parent.push_back(s.t1_to_parent[x]);
                for (Vertex x : core2) f.core_union_parent.push_back(s.t2_to_parent[x]);
                std::sort(f.core_union_parent.begin(), f.core_union_parent.end());
                f.core_union_parent.erase(
                    std::unique(f.core_union_parent.begin(), f.core_union_parent.end()),
                    f.core_union_parent.end());
            }
            splits_->push_back(std::move(f));
        }
        return *splits_;
    }

private:
    const Tree& t_;
    const Graph& g_;
    std::optional<std::vector<Vertex>> pend_;
    std::optional<Bipartition> bip_;
    int alpha_ = -1;
    std::optional<std::vector<Vertex>> core_;
    std::optional<std::vector<Vertex>> core_pend_;
    int pm_ = -1;
    std::optional<OmegaSample> omega_;
    std::optional<std::vector<SplitFacts>> splits_;
};

InstanceResult pass(TheoremId id) { return {id, Outcome::pass, {}}; }
InstanceResult fail(TheoremId id, std::string clause) {
    return {id, Outcome::counterexample, std::move(clause)};
}
InstanceResult skip(TheoremId id, std::string reason) {
    return {id, Outcome::skipped, std::move(reason)};
}

InstanceResult check_th4(TreeAnalysis& a) {
    const TheoremId id = TheoremId::th4;
    const int n = a.n();
    if (n > kAllStableSetsMaxOrder)
        return skip(id, "all-stable-sets clause needs n <= " +
                            std::to_string(kAllStableSetsMaxOrder));

    std::vector<std::uint64_t> adj(n, 0);
    for (const Edge& e : a.g().edges()) {
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
    }
    std::uint64_t pend_mask = 0;
    for (Vertex v : a.pend()) pend_mask |= std::uint64_t{1} << v;

    std::vector<std::vector<int>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = a.distances_from(v);

    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (2 * std::popcount(mask) < n) continue;
        bool stable = true;
        for (std::uint64_t scan = mask; scan && stable; scan &= scan - 1)
            if (adj[std::countr_zero(scan)] & mask) stable = false;
        if (!stable) continue;

        std::vector<Vertex> members;
        for (std::uint64_t scan = mask; scan; scan &= scan - 1)
            members.push_back(std::countr_zero(scan));

        if (!(mask & pend_mask))
            return fail(id, "stable set " + vertex_set_string(members) +
                                " of size >= n/2 contains no pendant vertex");

        bool found_pair = false;
        for (std::uint64_t scan = mask & pend_mask; scan && !found_pair;
             scan &= scan - 1) {
            const Vertex v = std::countr_zero(scan);
            for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
                const Vertex w = std::countr_zero(rest);
                if (w != v && dist[v][w] == 2) {
                    found_pair = true;
                    break;
                }
            }
        }
        if (!found_pair)
            return fail(id, "stable set " + vertex_set_string(members) +
                                " of size >= n/2 has no pendant member at "
                                "distance 2 from another member");
    }
    return pass(id);
}

InstanceResult check_cor8(TreeAnalysis& a) {
    const TheoremId id = TheoremId::cor8;
    if (a.n() > kEnumerationMaxOrder)
        return skip(id, "needs maximum-stable-set enumeration (n <= " +
                            std::to_string(kEnumerationMaxOrder) + ")");
    const auto& pend = a.pend();
    for (const StableSet& s : a.omega().witnesses) {
        bool hits = false;
        for (Vertex v : pend)
            if (s.contains(v)) {
                hits = true;
                break;
            }
        if (!hits)
            return fail(id, "maximum stable set " + vertex_set_string(s.members()) +
                                " avoids every pendant vertex");
    }
    return pass(id);
}

InstanceResult check_cor4(TreeAnalysis& a) {
    const TheoremId id = TheoremId::cor4;
    if (2 * a.alpha() != a.n()) return pass(id);  // hypothesis not met
    const auto& bip = a.bip();
    auto hits_pendant = [&](const std::vector<Vertex>& cls) {
        for (Vertex v : a.pend())
            if (std::binary_search(cls.begin(), cls.end(), v)) return true;
        return false;
    };
    if (!hits_pendant(bip.class_a))
        return fail(id, "alpha = n/2 but color class A contains no pendant vertex");
    if (!hits_pendant(bip.class_b))
        return fail(id, "alpha = n/2 but color class B contains no pendant vertex");
    return pass(id);
}

InstanceResult check_cor5(TreeAnalysis& a) {
    const TheoremId id = TheoremId::cor5;
    if (2 * a.alpha() != a.n()) return pass(id);
    const auto& pend = a.pend();
    for (std::size_t i = 0; i + 1 < pend.size(); ++i) {
        const std::vector<int> dist = a.distances_from(pend[i]);
        for (std::size_t j = i + 1; j < pend.size(); ++j)
            if (dist[pend[j]] % 2 == 1) return pass(id);
    }
    return fail(id, "alpha = n/2 but no two pendant vertices lie at odd distance");
}

InstanceResult check_prop6(TreeAnalysis& a) {
    const TheoremId id = TheoremId::prop6;
    const auto [value, cond] = is_strong_unique_independence(a.tree());
    (void)value;
    if (!cond.all_agree()) {
        std::string clause = "strong-unique characterizations disagree: ";
        clause += "unique-mss=" + std::to_string(cond.unique_mss_with_stable_complement);
        clause += " one-class=" + std::to_string(cond.pendants_in_one_class);
        clause += " even-distances=" + std::to_string(cond.pendant_distances_even);
        return fail(id, clause);
    }
    return pass(id);
}

InstanceResult check_cor1(TreeAnalysis& a) {
    const TheoremId id = TheoremId::cor1;
    if (a.n() > kEnumerationMaxOrder)
        return skip(id, "needs maximal-stable-set enumeration (n <= " +
                            std::to_string(kEnumerationMaxOrder) + ")");
    const auto& bip = a.bip();
    const int min_class = static_cast<int>(
        std::min(bip.class_a.size(), bip.class_b.size()));
    const auto& pend = a.pend();
    for (const StableSet& s : enumerate_maximal_stable_sets(a.g())) {
        if (s.size() <= min_class) continue;
        std::vector<Vertex> s_pend;
        for (Vertex v : pend)
            if (s.contains(v)) s_pend.push_back(v);
        if (s_pend.empty())
            return fail(id, "maximal stable set " + vertex_set_string(s.members()) +
                                " larger than min(|A|,|B|) avoids every pendant "
                                "vertex");
        bool found_pair = false;
        for (Vertex v : s_pend) {
            const std::vector<int> dist = a.distances_from(v);
            for (Vertex w : s.members())
                if (w != v && dist[w] == 2) {
                    found_pair = true;
                    break;
                }
            if (found_pair) break;
        }
        if (!found_pair)
            return fail(id, "maximal stable set " + vertex_set_string(s.members()) +
                                " larger than min(|A|,|B|) has no pendant member "
                                "at distance 2 from another member");
    }
    return pass(id);
}

InstanceResult check_th1th2(TreeAnalysis& a) {
    const TheoremId id = TheoremId::th1th2;
    if (a.n() > kEnumerationMaxOrder)
        return skip(id, "partition clause needs enumeration (n <= " +
                            std::to_string(kEnumerationMaxOrder) + ")");
    const bool plus_stable = is_alpha_plus_stable(a.g());
    const bool matching = a.pm_exists();
    const bool core_empty = a.core_set().empty();

    bool partition = false;
    if (a.n() == 2 * a.alpha()) {
        for (const StableSet& s : a.omega().witnesses) {
            std::vector<Vertex> complement;
            for (Vertex v = 0; v < a.n(); ++v)
                if (!s.contains(v)) complement.push_back(v);
            if (is_stable(a.g(), complement)) {
                partition = true;
                break;
            }
        }
    }

    if (plus_stable != matching || matching != partition || partition != core_empty) {
        std::ostringstream clause;
        clause << "four-way equivalence broken: alpha_plus_stable=" << plus_stable
               << " perfect_matching=" << matching
               << " disjoint_mss_partition=" << partition
               << " core_empty=" << core_empty;
        return fail(id, clause.str());
    }
    return pass(id);
}

InstanceResult check_prop4cor3(TreeAnalysis& a) {
    const TheoremId id = TheoremId::prop4cor3;
    const bool alpha_large = 2 * a.alpha() > a.n();
    const std::size_t core_size = a.core_set().size();
    if (alpha_large != (core_size >= 2))
        return fail(id, "alpha > n/2 is " + std::to_string(alpha_large) +
                            " but |core| = " + std::to_string(core_size));
    if ((2 * a.alpha() == a.n()) != (core_size == 0))
        return fail(id, "alpha = n/2 is " + std::to_string(2 * a.alpha() == a.n()) +
                            " but |core| = " + std::to_string(core_size));
    if (core_size == 1)
        return fail(id, "tree with |core| = 1");
    return pass(id);
}

InstanceResult check_lem3(TreeAnalysis& a) {
    const TheoremId id = TheoremId::lem3;
    for (const auto& f : a.splits()) {
        if (!f.v_in_core_parent) continue;
        if (a.alpha() != f.alpha1 + f.alpha2 - 1)
            return fail(id, "split at vertex " + std::to_string(f.v) + ": alpha(T) = " +
                                std::to_string(a.alpha()) + " but alpha(T1)+alpha(T2)-1 = " +
                                std::to_string(f.alpha1 + f.alpha2 - 1));
    }
    return pass(id);
}

InstanceResult check_prop5(TreeAnalysis& a) {
    const TheoremId id = TheoremId::prop5;
    for (const auto& f : a.splits()) {
        const bool both = f.v_in_core1 && f.v_in_core2;
        if (f.v_in_core_parent != both) {
            std::ostringstream clause;
            clause << "split at vertex " << f.v << ": v in core(T) = "
                   << f.v_in_core_parent << " but v in core(T1) = " << f.v_in_core1
                   << ", v in core(T2) = " << f.v_in_core2;
            return fail(id, clause.str());
        }
    }
    return pass(id);
}

InstanceResult check_lem4(TreeAnalysis& a) {
    const TheoremId id = TheoremId::lem4;
    for (const auto& f : a.splits()) {
        if (!f.v_in_core_parent) continue;
        if (a.core_set() != f.core_union_parent)
            return fail(id, "split at vertex " + std::to_string(f.v) + ": core(T) = " +
                                vertex_set_string(a.core_set()) +
                                " but core(T1) u core(T2) = " +
                                vertex_set_string(f.core_union_parent));
    }
    return pass(id);
}

InstanceResult check_th6(TreeAnalysis& a) {
    const TheoremId id = TheoremId::th6;
    if (2 * a.alpha() > a.n() && a.core_pend().size() < 2)
        return fail(id, "alpha > n/2 but |core intersect pend| = " +
                            std::to_string(a.core_pend().size()));
    return pass(id);
}

InstanceResult check_deg2k(TreeAnalysis& a) {
    const TheoremId id = TheoremId::deg2k;
    if (2 * a.alpha() <= a.n()) return pass(id);
    for (Vertex v : a.core_set()) {
        const int k = a.g().degree(v) / 2;
        if (k < 2) continue;
        if (static_cast<int>(a.core_pend().size()) < 2 * k)
            return fail(id, "core vertex " + std::to_string(v) + " has degree " +
                                std::to_string(a.g().degree(v)) +
                                " but |core intersect pend| = " +
                                std::to_string(a.core_pend().size()) + " < " +
                                std::to_string(2 * k));
    }
    return pass(id);
}

InstanceResult check_th7(TreeAnalysis& a) {
    const TheoremId id = TheoremId::th7;
    const bool alpha_large = 2 * a.alpha() > a.n();
    const bool no_matching = !a.pm_exists();
    const bool two_core_pend = a.core_pend().size() >= 2;
    const bool core_nonempty = !a.core_set().empty();
    if (alpha_large != no_matching || no_matching != two_core_pend ||
        two_core_pend != core_nonempty) {
        std::ostringstream clause;
        clause << "four-way equivalence broken: alpha>n/2=" << alpha_large
               << " no_matching=" << no_matching
               << " core_pend>=2=" << two_core_pend
               << " core_nonempty=" << core_nonempty;
        return fail(id, clause.str());
    }
    return pass(id);
}

InstanceResult check_even_dist(TreeAnalysis& a) {
    const TheoremId id = TheoremId::even_dist;
    if (2 * a.alpha() <= a.n()) return pass(id);
    const auto& cp = a.core_pend();

    bool found_even = false;
    for (std::size_t i = 0; i + 1 < cp.size() && !found_even; ++i) {
        const std::vector<int> dist = a.distances_from(cp[i]);
        for (std::size_t j = i + 1; j < cp.size(); ++j)
            if (dist[cp[j]] % 2 == 0) {
                found_even = true;
                break;
            }
    }
    if (!found_even)
        return fail(id, "alpha > n/2 but no two core-pendant vertices lie at "
                        "even distance");

    if (cp.size() == 2) {
        const int d = a.distances_from(cp[0])[cp[1]];
        if (d == 4)
            return fail(id, "exactly two core-pendant vertices and their "
                            "distance equals 4");
    }
    return pass(id);
}

InstanceResult check_berge(TreeAnalysis& a) {
    const TheoremId id = TheoremId::berge_pend;
    if (a.pend().size() < 2)
        return fail(id, "tree with fewer than two pendant vertices");
    return pass(id);
}

InstanceResult run_check(TheoremId id, TreeAnalysis& a) {
    switch (id) {
        case TheoremId::th4: return check_th4(a);
        case TheoremId::cor8: return check_cor8(a);
        case TheoremId::cor4: return check_cor4(a);
        case TheoremId::cor5: return check_cor5(a);
        case TheoremId::prop6: return check_prop6(a);
        case TheoremId::cor1: return check_cor1(a);
        case TheoremId::th1th2: return check_th1th2(a);
        case TheoremId::prop4cor3: return check_prop4cor3(a);
        case TheoremId::lem3: return check_lem3(a);
        case TheoremId::prop5: return check_prop5(a);
        case TheoremId::lem4: return check_lem4(a);
        case TheoremId::th6: return check_th6(a);
        case TheoremId::deg2k: return check_deg2k(a);
        case TheoremId::th7: return check_th7(a);
        case TheoremId::even_dist: return check_even_dist(a);
        case TheoremId::berge_pend: return check_berge(a);
    }
    throw std::logic_error("unknown theorem id");
}

int resolve_threads() {
    if (const char* env = std::getenv("STABLECORE_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<TheoremId> selected_theorems(const SweepPlan& plan) {
    if (plan.theorems.empty())
        return {kAllTheorems.begin(), kAllTheorems.end()};
    std::vector<TheoremId> out;
    for (TheoremId id : plan.theorems)
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    return out;
}

// Instance stream shared by sweep and the open-problem search.
struct InstanceProvider {
    long long total = 0;
    std::vector<std::pair<int, long long>> offsets;  // exhaustive: (n, first index)
    const SweepPlan* plan = nullptr;

    explicit InstanceProvider(const SweepPlan& p) : plan(&p) {
        if (p.mode == SweepPlan::Mode::exhaustive) {
            if (p.min_n < 2 || p.max_n < p.min_n)
                throw std::invalid_argument("exhaustive sweep needs 2 <= min_n <= max_n");
            if (p.max_n > 8)
                throw std::invalid_argument("exhaustive sweep is limited to n <= 8");
            for (int n = p.min_n; n <= p.max_n; ++n) {
                offsets.emplace_back(n, total);
                total += labeled_tree_count(n);
            }
        } else {
            if (p.n < 2) throw std::invalid_argument("random sweep needs n >= 2");
            if (p.count < 0) throw std::invalid_argument("negative tree count");
            total = p.count;
        }
    }

    Tree make(long long index) const {
        if (plan->mode == SweepPlan::Mode::random)
            return random_tree(plan->n, plan->seed + static_cast<std::uint64_t>(index));
        auto it = std::upper_bound(offsets.begin(), offsets.end(), index,
                                   [](long long x, const auto& o) { return x < o.second; });
        --it;
        return labeled_tree_by_index(it->first, index - it->second);
    }
};

}  // namespace

std::string_view theorem_name(TheoremId id) { return info(id).name; }

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (const TheoremInfo& t : kTheoremInfo)
        if (t.name == name) return t.id;
    return std::nullopt;
}

bool theorem_needs_enumeration(TheoremId id) { return info(id).needs_enumeration; }

int theorem_max_order(TheoremId id) { return info(id).max_order; }

InstanceResult verify(TheoremId id, const Tree& t) {
    TreeAnalysis analysis(t);
    return run_check(id, analysis);
}

std::vector<VerdictRecord> sweep(const SweepPlan& plan) {
    const std::vector<TheoremId> selected = selected_theorems(plan);
    const InstanceProvider provider(plan);

    struct TheoremAgg {
        long long checked = 0;
        long long skipped = 0;
        std::optional<Counterexample> first;
    };
    using ChunkAgg = std::vector<TheoremAgg>;

    constexpr long long kChunk = 32;
    const long long num_chunks = (provider.total + kChunk - 1) / kChunk;
    std::vector<ChunkAgg> chunks(static_cast<std::size_t>(num_chunks));

    std::atomic<long long> next_chunk{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        try {
            for (;;) {
                const long long c = next_chunk.fetch_add(1);
                if (c >= num_chunks) break;
                ChunkAgg agg(selected.size());
                const long long begin = c * kChunk;
                const long long end = std::min(provider.total, begin + kChunk);
                for (long long i = begin; i < end; ++i) {
                    const Tree t = provider.make(i);
                    TreeAnalysis analysis(t);
                    for (std::size_t s = 0; s < selected.size(); ++s) {
                        const InstanceResult r = run_check(selected[s], analysis);
                        switch (r.outcome) {
                            case Outcome::pass:
                                ++agg[s].checked;
                                break;
                            case Outcome::skipped:
                                ++agg[s].skipped;
                                break;
                            case Outcome::counterexample:
                                ++agg[s].checked;
                                if (!agg[s].first)
                                    agg[s].first = Counterexample{
                                        write_edge_list(t.graph()), r.clause};
                                break;
                        }
                    }
                }
                chunks[static_cast<std::size_t>(c)] = std::move(agg);
            }
        } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const int thread_count =
        static_cast<int>(std::min<long long>(resolve_threads(),
                                             std::max<long long>(num_chunks, 1)));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<VerdictRecord> records(selected.size());
    for (std::size_t s = 0; s < selected.size(); ++s) records[s].theorem = selected[s];
    for (const ChunkAgg& agg : chunks)
        for (std::size_t s = 0; s < agg.size(); ++s) {
            records[s].instances_checked += agg[s].checked;
            records[s].instances_skipped += agg[s].skipped;
            if (agg[s].first && !records[s].counterexample) {
                records[s].counterexample = agg[s].first;
                records[s].pass = false;
            }
        }
    return records;
}

std::string verdicts_to_jsonl(std::span<const VerdictRecord> records) {
    std::string out;
    for (const VerdictRecord& r : records) {
        nlohmann::ordered_json j;
        j["theorem"] = theorem_name(r.theorem);
        j["instances_checked"] = r.instances_checked;
        j["instances_skipped"] = r.instances_skipped;
        j["verdict"] = r.pass ? "pass" : "counterexample";
        if (r.counterexample) {
            j["counterexample"] = {{"tree", r.counterexample->tree_edge_list},
                                   {"clause", r.counterexample->clause}};
        }
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string sweep_summary_table(std::span<const VerdictRecord> records) {
    std::ostringstream out;
    out << "theorem      checked   skipped  verdict\n";
    for (const VerdictRecord& r : records) {
        out << theorem_name(r.theorem);
        for (std::size_t i = theorem_name(r.theorem).size(); i < 11; ++i) out << ' ';
        std::string checked = std::to_string(r.instances_checked);
        std::string skipped = std::to_string(r.instances_skipped);
        out << std::string(9 - std::min<std::size_t>(9, checked.size()), ' ') << checked
            << std::string(10 - std::min<std::size_t>(10, skipped.size()), ' ')
            << skipped << "  " << (r.pass ? "pass" : "counterexample") << '\n';
        if (r.counterexample) out << "  clause: " << r.counterexample->clause << '\n';
    }
    return out.str();
}

SearchReport open_problem_search(KRule rule, const SweepPlan& plan,
                                 int max_candidates) {
    const InstanceProvider provider(plan);
    SearchReport report;
    report.k_rule = rule;

    for (long long i = 0; i < provider.total; ++i) {
        const Tree t = provider.make(i);
        const Graph& g = t.graph();
        ++report.trees_seen;

        if (g.order() > kEnumerationMaxOrder) {
            ++report.trees_skipped;
            continue;
        }
        int k;
        if (rule == KRule::half_n) {
            if (g.order() % 2 != 0) {
                ++report.trees_skipped;
                continue;
            }
            k = g.order() / 2;
        } else {
            const Bipartition bip = bipartition(t);
            k = static_cast<int>(std::min(bip.class_a.size(), bip.class_b.size()));
        }

        const std::vector<StableSet> sets = enumerate_maximal_stable_sets(g, k);
        if (sets.empty()) continue;
        ++report.trees_with_sets;

        std::vector<Vertex> intersection = sets.front().members();
        for (std::size_t s = 1; s < sets.size() && !intersection.empty(); ++s) {
            std::vector<Vertex> next;
            std::set_intersection(intersection.begin(), intersection.end(),
                                  sets[s].members().begin(), sets[s].members().end(),
                                  std::back_inserter(next));
            intersection = std::move(next);
        }
        const std::vector<Vertex> pend = pendant_vertices(g);
        std::vector<Vertex> pend_in;
        std::set_intersection(intersection.begin(), intersection.end(), pend.begin(),
                              pend.end(), std::back_inserter(pend_in));
        const int count = static_cast<int>(pend_in.size());

        ++report.pendant_count_distribution[count];
        if (report.min_count < 0 || count < report.min_count) report.min_count = count;
        if (count <= 1) {
            ++report.candidate_total;
            if (static_cast<int>(report.candidates.size()) < max_candidates)
                report.candidates.push_back({write_edge_list(g), count});
        }
    }
    return report;
}

std::string search_report_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["k_rule"] = r.k_rule == KRule::half_n ? "half_n" : "min_bipartition";
    j["trees_seen"] = r.trees_seen;
    j["trees_skipped"] = r.trees_skipped;
    j["trees_with_sets"] = r.trees_with_sets;
    nlohmann::ordered_json dist = nlohmann::ordered_json::object();
    for (const auto& [count, trees] : r.pendant_count_distribution)
        dist[std::to_string(count)] = trees;
    j["pendant_count_distribution"] = dist;
    j["min_count"] = r.min_count;
    j["candidate_total"] = r.candidate_total;
    nlohmann::ordered_json candidates = nlohmann::ordered_json::array();
    for (const auto& c : r.candidates)
        candidates.push_back({{"count", c.count}, {"tree", c.tree_edge_list}});
    j["candidates"] = candidates;
    return j.dump(2) + "\n";
}

}  // namespace stablecore
