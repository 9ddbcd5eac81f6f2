#include <algorithm>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "stablecore/core_analysis.hpp"
#include "stablecore/graph.hpp"
#include "stablecore/graph_io.hpp"
#include "stablecore/stable_sets.hpp"
#include "stablecore/theorems.hpp"

using namespace stablecore;

namespace {

SweepPlan exhaustive_plan(int min_n, int max_n, std::vector<TheoremId> ids = {}) {
    SweepPlan plan;
    plan.mode = SweepPlan::Mode::exhaustive;
    plan.min_n = min_n;
    plan.max_n = max_n;
    plan.theorems = std::move(ids);
    return plan;
}

const VerdictRecord& record_for(const std::vector<VerdictRecord>& records,
                                TheoremId id) {
    for (const VerdictRecord& r : records)
        if (r.theorem == id) return r;
    REQUIRE(false);
    return records.front();
}

}  // namespace

TEST_CASE("theorem names round trip") {
    for (TheoremId id : kAllTheorems)
        CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK(!theorem_from_name("nope").has_value());
    CHECK(theorem_needs_enumeration(TheoremId::cor8));
    CHECK(!theorem_needs_enumeration(TheoremId::th7));
}

TEST_CASE("single-instance verifiers on hand-checked trees") {
    CHECK(verify(TheoremId::th6, fixtures::path(3)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::th7, fixtures::path(4)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::prop6, fixtures::path(3)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::prop6, fixtures::path(4)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::berge_pend, fixtures::star(5)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::lem3, spider(2)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::th6, spider(3)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::cor1, fixtures::no_pendant_maximal_tree_large()).outcome ==
          Outcome::pass);
    CHECK(verify(TheoremId::cor1, fixtures::no_pendant_maximal_tree_small()).outcome ==
          Outcome::pass);
    CHECK(verify(TheoremId::even_dist, fixtures::two_core_pendants_tree()).outcome ==
          Outcome::pass);
}

TEST_CASE("the distance-2 clause of th4 is refuted by the 4-path") {
    // {0, 3} is a stable set of size n/2 whose only pendant members sit at
    // distance 3, so the clause fails; the first clause (a pendant member
    // exists) holds for every tree we have ever checked.
    const InstanceResult r = verify(TheoremId::th4, fixtures::path(4));
    CHECK(r.outcome == Outcome::counterexample);
    CHECK(r.clause.find("{0, 3}") != std::string::npos);
    CHECK(r.clause.find("distance 2") != std::string::npos);

    CHECK(verify(TheoremId::th4, fixtures::path(3)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::th4, fixtures::star(3)).outcome == Outcome::pass);

    // Degenerate refutation: on the 2-path each singleton {v} already meets
    // the size bound, and a one-element set has no second member at any
    // distance.
    CHECK(verify(TheoremId::th4, fixtures::path(2)).outcome ==
          Outcome::counterexample);
}

TEST_CASE("the never-4 clause of even_dist is refuted by the k=2 spider") {
    // Its core pendants are exactly the two outer leaves, at distance 4.
    const InstanceResult r = verify(TheoremId::even_dist, spider(2));
    CHECK(r.outcome == Outcome::counterexample);
    CHECK(r.clause.find("equals 4") != std::string::npos);

    CHECK(verify(TheoremId::even_dist, fixtures::path(3)).outcome == Outcome::pass);
    CHECK(verify(TheoremId::even_dist, spider(3)).outcome == Outcome::pass);
}

TEST_CASE("oracle-capped verifiers skip, never pass, above their caps") {
    const Tree big = random_tree(40, 1);
    CHECK(verify(TheoremId::th4, big).outcome == Outcome::skipped);
    CHECK(verify(TheoremId::cor8, big).outcome == Outcome::skipped);
    CHECK(verify(TheoremId::cor1, big).outcome == Outcome::skipped);
    CHECK(verify(TheoremId::th1th2, big).outcome == Outcome::skipped);
    CHECK(verify(TheoremId::th7, big).outcome == Outcome::pass);
}

TEST_CASE("exhaustive sweep counts Cayley numbers of trees") {
    const auto records =
        sweep(exhaustive_plan(2, 5, {TheoremId::berge_pend}));
    REQUIRE(records.size() == 1);
    CHECK(records.front().instances_checked == 1 + 3 + 16 + 125);
    CHECK(records.front().pass);
}

TEST_CASE("exhaustive sweep up to n=6 passes for the sound statements") {
    std::vector<TheoremId> ids;
    for (TheoremId id : kAllTheorems)
        if (id != TheoremId::th4 && id != TheoremId::even_dist) ids.push_back(id);
    const auto records = sweep(exhaustive_plan(2, 6, ids));
    for (const VerdictRecord& r : records) {
        INFO(theorem_name(r.theorem));
        CHECK(r.pass);
        CHECK(r.instances_checked == 1 + 3 + 16 + 125 + 1296);
        CHECK(r.instances_skipped == 0);
    }
}

TEST_CASE("sweep finds and stores replayable counterexamples") {
    const auto records = sweep(exhaustive_plan(2, 5, {TheoremId::even_dist}));
    const VerdictRecord& r = record_for(records, TheoremId::even_dist);
    CHECK(!r.pass);
    REQUIRE(r.counterexample.has_value());

    // Replay: the stored edge list reproduces the failure in isolation.
    const Tree stored = Tree(parse_edge_list(r.counterexample->tree_edge_list));
    const InstanceResult replay = verify(TheoremId::even_dist, stored);
    CHECK(replay.outcome == Outcome::counterexample);
    CHECK(replay.clause == r.counterexample->clause);
}

TEST_CASE("sweep is deterministic and mode-validated") {
    SweepPlan plan;
    plan.mode = SweepPlan::Mode::random;
    plan.n = 30;
    plan.count = 50;
    plan.seed = 7;
    plan.theorems = {TheoremId::th7, TheoremId::prop4cor3};
    const std::string once = verdicts_to_jsonl(sweep(plan));
    const std::string twice = verdicts_to_jsonl(sweep(plan));
    CHECK(once == twice);
    CHECK(once.find("\"verdict\":\"pass\"") != std::string::npos);

    SweepPlan bad;
    bad.mode = SweepPlan::Mode::exhaustive;
    bad.max_n = 9;
    CHECK_THROWS_AS(sweep(bad), std::invalid_argument);
}

TEST_CASE("random sweep covers the removal-test theorems at n=200") {
    SweepPlan plan;
    plan.mode = SweepPlan::Mode::random;
    plan.n = 200;
    plan.count = 5;
    plan.seed = 3;
    for (TheoremId id : kAllTheorems)
        if (!theorem_needs_enumeration(id)) plan.theorems.push_back(id);
    for (const VerdictRecord& r : sweep(plan)) {
        INFO(theorem_name(r.theorem));
        CHECK(r.pass);
        CHECK(r.instances_checked == 5);
        CHECK(r.instances_skipped == 0);
    }
}

TEST_CASE("jsonl and summary formats") {
    const auto records = sweep(exhaustive_plan(2, 4, {TheoremId::th6, TheoremId::th7}));
    const std::string jsonl = verdicts_to_jsonl(records);
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
    CHECK(jsonl.find("\"theorem\":\"th6\"") != std::string::npos);
    CHECK(jsonl.find("\"instances_checked\":20") != std::string::npos);

    const std::string table = sweep_summary_table(records);
    CHECK(table.find("th6") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);
}

TEST_CASE("open problem search tabulates pendant counts") {
    // The three maximal stable sets of size 2 in the 4-path intersect to the
    // empty set, so it contributes a zero to the distribution.
    SweepPlan plan = exhaustive_plan(4, 4);
    const SearchReport report = open_problem_search(KRule::half_n, plan);
    CHECK(report.trees_seen == 16);
    CHECK(report.min_count == 0);
    CHECK(report.pendant_count_distribution.count(0) == 1);
    CHECK(report.candidate_total > 0);
    REQUIRE(!report.candidates.empty());
    const Tree replay = Tree(parse_edge_list(report.candidates.front().tree_edge_list));
    CHECK(replay.order() == 4);

    // P2: k = 1, the two singletons intersect to nothing.
    const SearchReport tiny =
        open_problem_search(KRule::half_n, exhaustive_plan(2, 2));
    CHECK(tiny.trees_seen == 1);
    CHECK(tiny.min_count == 0);

    const SearchReport by_class =
        open_problem_search(KRule::min_bipartition, exhaustive_plan(2, 5));
    CHECK(by_class.trees_seen == 1 + 3 + 16 + 125);
    CHECK(by_class.trees_skipped == 0);
    const std::string json = search_report_json(by_class);
    CHECK(json.find("\"k_rule\": \"min_bipartition\"") != std::string::npos);
    CHECK(json.find("\"pendant_count_distribution\"") != std::string::npos);

    // Odd orders have no half-n rule; they are skipped, not fabricated.
    const SearchReport odd =
        open_problem_search(KRule::half_n, exhaustive_plan(3, 3));
    CHECK(odd.trees_seen == 3);
    CHECK(odd.trees_skipped == 3);
}
