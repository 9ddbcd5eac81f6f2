#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablecore/graph.hpp"

namespace stablecore {

/// Largest order at which the all-stable-sets clause of th4 is swept.
inline constexpr int kAllStableSetsMaxOrder = 12;

enum class TheoremId {
    th4,
    cor8,
    cor4,
    cor5,
    prop6,
    cor1,
    th1th2,
    prop4cor3,
    lem3,
    prop5,
    lem4,
    th6,
    deg2k,
    th7,
    even_dist,
    berge_pend,
};

inline constexpr std::array<TheoremId, 16> kAllTheorems = {
    TheoremId::th4,    TheoremId::cor8,      TheoremId::cor4,  TheoremId::cor5,
    TheoremId::prop6,  TheoremId::cor1,      TheoremId::th1th2, TheoremId::prop4cor3,
    TheoremId::lem3,   TheoremId::prop5,     TheoremId::lem4,  TheoremId::th6,
    TheoremId::deg2k,  TheoremId::th7,       TheoremId::even_dist,
    TheoremId::berge_pend,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// True for statements whose check needs a subset-enumeration oracle (or the
/// capped exact solver) and therefore cannot run on large instances.
bool theorem_needs_enumeration(TheoremId id);

/// Largest tree order the single-instance checker accepts; instances above
/// it are reported as skipped, never as pass.
int theorem_max_order(TheoremId id);

enum class Outcome { pass, counterexample, skipped };

/// Result of checking one statement on one tree.
struct InstanceResult {
    TheoremId theorem{};
    Outcome outcome = Outcome::pass;
    std::string clause;  // violated clause, or the reason an instance was skipped
};

/// Checks every clause of the named statement on t.
InstanceResult verify(TheoremId id, const Tree& t);

struct Counterexample {
    std::string tree_edge_list;
    std::string clause;
};

/// Aggregated outcome of one theorem over a sweep.
struct VerdictRecord {
    TheoremId theorem{};
    long long instances_checked = 0;
    long long instances_skipped = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;  // first one, by tree order
};

struct SweepPlan {
    enum class Mode { exhaustive, random };
    Mode mode = Mode::exhaustive;
    int min_n = 2;           // exhaustive range (inclusive)
    int max_n = 7;
    int n = 0;               // random mode: tree order
    long long count = 0;     // random mode: number of trees
    std::uint64_t seed = 0;  // random mode: instance i uses seed + i
    std::vector<TheoremId> theorems;  // empty selects all
};

/// Runs the plan. Deterministic for a fixed plan regardless of the number of
/// worker threads (capped by the STABLECORE_THREADS environment variable,
/// 0 or unset meaning auto).
std::vector<VerdictRecord> sweep(const SweepPlan& plan);

/// One JSON object per line, in kAllTheorems order of the selected set.
std::string verdicts_to_jsonl(std::span<const VerdictRecord> records);

/// Human-readable fixed-width summary.
std::string sweep_summary_table(std::span<const VerdictRecord> records);

enum class KRule { half_n, min_bipartition };

/// Data gathered for one open problem: for each tree, the pendant vertices
/// lying in the intersection of all maximal stable sets of size k.
struct SearchReport {
    KRule k_rule{};
    long long trees_seen = 0;
    long long trees_skipped = 0;     // k undefined (odd n under half_n) or over cap
    long long trees_with_sets = 0;   // at least one maximal stable set of size k
    std::map<int, long long> pendant_count_distribution;
    int min_count = -1;              // -1 when no tree produced data
    struct Candidate {
        std::string tree_edge_list;
        int count = 0;
    };
    std::vector<Candidate> candidates;  // trees with count <= 1, capped
    long long candidate_total = 0;      // total number of count <= 1 trees
};

SearchReport open_problem_search(KRule rule, const SweepPlan& plan,
                                 int max_candidates = 100);

std::string search_report_json(const SearchReport& report);

}  // namespace stablecore
