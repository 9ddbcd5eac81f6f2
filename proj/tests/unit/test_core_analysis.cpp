#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "stablecore/core_analysis.hpp"
#include "stablecore/graph.hpp"
#include "stablecore/stable_sets.hpp"

using namespace stablecore;

TEST_CASE("core on the named examples") {
    CHECK(core(Forest(fixtures::path(3))) == std::vector<Vertex>{0, 2});
    CHECK(core(Forest(fixtures::path(4))).empty());
    for (int k = 2; k <= 5; ++k) {
        const std::vector<Vertex> c = core(Forest(spider(k)));
        CHECK(std::binary_search(c.begin(), c.end(), 0));  // hub
    }
}

TEST_CASE("removal-test core equals the intersection of enumerated witnesses") {
    for (int n = 2; n <= 7; ++n)
        for (long long i = 0; i < labeled_tree_count(n); ++i) {
            const Tree t = labeled_tree_by_index(n, i);
            CHECK(core(Forest(t)) == oracle::core_by_intersection(t.graph()));
        }
    std::mt19937_64 pick(11);
    for (int round = 0; round < 1000; ++round) {
        const Tree t = random_tree(2 + static_cast<int>(pick() % 11), pick());
        CHECK(core(Forest(t)) == oracle::core_by_intersection(t.graph()));
    }
}

TEST_CASE("alpha-plus stability") {
    CHECK(is_alpha_plus_stable(fixtures::path(2).graph()));   // no non-edges
    CHECK(!is_alpha_plus_stable(fixtures::path(3).graph()));  // edge {0,2} drops alpha
    CHECK(is_alpha_plus_stable(fixtures::path(4).graph()));   // all 3 non-edges checked

    std::mt19937_64 pick(23);
    for (int round = 0; round < 60; ++round) {
        const Tree t = random_tree(2 + static_cast<int>(pick() % 9), pick());
        CHECK(is_alpha_plus_stable(t.graph()) == oracle::alpha_plus_stable(t.graph()));
    }
    CHECK_THROWS_AS(is_alpha_plus_stable(Graph(65, {})), std::invalid_argument);
}

TEST_CASE("alpha-plus stability iff small core, on all small trees") {
    for (int n = 2; n <= 7; ++n)
        for (long long i = 0; i < labeled_tree_count(n); ++i) {
            const Tree t = labeled_tree_by_index(n, i);
            const std::size_t core_size = oracle::core_by_intersection(t.graph()).size();
            CHECK(is_alpha_plus_stable(t.graph()) == (core_size <= 1));
        }
}

TEST_CASE("perfect matching by greedy leaf removal") {
    CHECK(perfect_matching(fixtures::path(2)) == std::vector<Edge>{{0, 1}});
    CHECK(!perfect_matching(fixtures::path(3)).has_value());
    CHECK(perfect_matching(fixtures::path(4)) == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(!perfect_matching(fixtures::star(3)).has_value());

    for (int n = 2; n <= 7; ++n)
        for (long long i = 0; i < labeled_tree_count(n); ++i) {
            const Tree t = labeled_tree_by_index(n, i);
            const auto matching = perfect_matching(t);
            CHECK(matching.has_value() == oracle::perfect_matching_exists(t.graph()));
            if (matching) {
                CHECK(matching->size() == static_cast<std::size_t>(n) / 2);
                std::vector<char> covered(n, 0);
                for (const Edge& e : *matching) {
                    CHECK(t.has_edge(e.u, e.v));
                    CHECK(!covered[e.u]);
                    CHECK(!covered[e.v]);
                    covered[e.u] = covered[e.v] = 1;
                }
            }
        }
}

TEST_CASE("strong unique independence on the named examples") {
    CHECK(is_strong_unique_independence(fixtures::path(3)).first);
    CHECK(!is_strong_unique_independence(fixtures::path(4)).first);
    CHECK(is_strong_unique_independence(spider(2)).first);

    const auto [value, cond] = is_strong_unique_independence(fixtures::path(4));
    CHECK(!value);
    CHECK(cond.all_agree());
}

TEST_CASE("the three strong-unique conditions agree on all small trees") {
    for (int n = 2; n <= 7; ++n)
        for (long long i = 0; i < labeled_tree_count(n); ++i) {
            const auto [value, cond] =
                is_strong_unique_independence(labeled_tree_by_index(n, i));
            CHECK(cond.all_agree());
            CHECK(value == cond.unique_mss_with_stable_complement);
        }
}

TEST_CASE("clique_bond identifies the chosen vertices") {
    const Tree p3 = fixtures::path(3);

    const BondedTree chain = clique_bond(p3, 2, p3, 0);
    CHECK(chain.tree.edges() == fixtures::path(5).edges());
    CHECK(chain.bond_vertex == 2);
    CHECK(chain.map2 == std::vector<Vertex>{2, 3, 4});

    // Bonding the two centers stacks their neighborhoods onto one vertex.
    const BondedTree star = clique_bond(p3, 1, p3, 1);
    CHECK(star.tree.order() == 5);
    CHECK(star.tree.degree(1) == 4);
    CHECK(star.tree.edges() ==
          std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {1, 4}});

    // The endpoint bond of two 3-paths is the k=2 spider up to relabeling:
    // map the spider through 3->0, 1->1, 0->2, 2->3, 4->4.
    const Tree sp = spider(2);
    std::vector<Edge> relabeled;
    const std::vector<Vertex> m = {2, 1, 3, 0, 4};
    for (const Edge& e : sp.edges()) relabeled.push_back(make_edge(m[e.u], m[e.v]));
    std::sort(relabeled.begin(), relabeled.end());
    CHECK(relabeled == chain.tree.edges());
}

TEST_CASE("split_at divides a tree at an internal vertex") {
    const Tree p3 = fixtures::path(3);
    const Vertex left[1] = {0};
    const BondingSplit halves = split_at(p3, 1, left);
    CHECK(halves.t1.order() == 2);
    CHECK(halves.t2.order() == 2);
    CHECK(halves.t1_to_parent == std::vector<Vertex>{0, 1});
    CHECK(halves.t2_to_parent == std::vector<Vertex>{1, 2});

    const Tree sp = spider(2);
    const Vertex leg[1] = {1};
    const BondingSplit legs = split_at(sp, 0, leg);
    CHECK(legs.t1.order() == 3);
    CHECK(legs.t2.order() == 3);
    CHECK(legs.t1_to_parent == std::vector<Vertex>{0, 1, 3});
    CHECK(legs.t2_to_parent == std::vector<Vertex>{0, 2, 4});

    const Tree p5 = fixtures::path(5);
    const Vertex mid[1] = {1};
    const BondingSplit p5_split = split_at(p5, 2, mid);
    CHECK(p5_split.t1.order() == 3);
    CHECK(p5_split.t2.order() == 3);

    CHECK_THROWS_AS(split_at(p3, 0, left), std::invalid_argument);  // pendant
    CHECK_THROWS_AS(split_at(p3, 1, std::span<const Vertex>{}), std::invalid_argument);
    const Vertex both[2] = {0, 2};
    CHECK_THROWS_AS(split_at(p3, 1, both), std::invalid_argument);  // empty rest
}

TEST_CASE("bond then split recovers the parts") {
    std::mt19937_64 pick(31);
    for (int round = 0; round < 50; ++round) {
        const Tree t1 = random_tree(2 + static_cast<int>(pick() % 6), pick());
        const Tree t2 = random_tree(2 + static_cast<int>(pick() % 6), pick());
        const Vertex v1 = static_cast<Vertex>(pick() % t1.order());
        const Vertex v2 = static_cast<Vertex>(pick() % t2.order());
        const BondedTree bonded = clique_bond(t1, v1, t2, v2);
        CHECK(bonded.tree.order() == t1.order() + t2.order() - 1);

        // Splitting at the bond with t1's neighbor block recovers both vertex sets.
        std::vector<Vertex> block;
        for (Vertex w : t1.neighbors(v1)) block.push_back(bonded.map1[w]);
        const BondingSplit split = split_at(bonded.tree, bonded.bond_vertex, block);

        std::vector<Vertex> expect1;
        for (Vertex v = 0; v < t1.order(); ++v) expect1.push_back(bonded.map1[v]);
        std::sort(expect1.begin(), expect1.end());
        std::vector<Vertex> expect2;
        for (Vertex v = 0; v < t2.order(); ++v) expect2.push_back(bonded.map2[v]);
        std::sort(expect2.begin(), expect2.end());
        CHECK(split.t1_to_parent == expect1);
        CHECK(split.t2_to_parent == expect2);

        // Parts share exactly the bond vertex and their edges partition E.
        CHECK(split.t1.order() + split.t2.order() == bonded.tree.order() + 1);
        CHECK(split.t1.graph().edge_count() + split.t2.graph().edge_count() ==
              bonded.tree.graph().edge_count());
    }
}

TEST_CASE("core_pendant_report on the named examples") {
    const CoreReport p3 = core_pendant_report(fixtures::path(3));
    CHECK(p3.n == 3);
    CHECK(p3.alpha == 2);
    CHECK(p3.core == std::vector<Vertex>{0, 2});
    CHECK(p3.core_pend == std::vector<Vertex>{0, 2});
    CHECK(!p3.has_perfect_matching);
    CHECK(p3.strong_unique);
    CHECK(p3.core_pend_distance_parities == std::vector<int>{2});

    const CoreReport p4 = core_pendant_report(fixtures::path(4));
    CHECK(p4.alpha == 2);
    CHECK(p4.core.empty());
    CHECK(p4.has_perfect_matching);
    CHECK(p4.alpha_plus_stable);

    const CoreReport deep = core_pendant_report(fixtures::two_core_pendants_tree());
    CHECK(deep.core_pend == std::vector<Vertex>{0, 3});
    CHECK(deep.core_pend_distance_parities == std::vector<int>{6});
}

TEST_CASE("core report JSON is byte-stable with fixed key order") {
    const std::string json = core_report_json(core_pendant_report(fixtures::path(3)));
    CHECK(json == core_report_json(core_pendant_report(fixtures::path(3))));
    CHECK(json.back() == '\n');

    const char* keys[] = {"\"n\"",
                          "\"alpha\"",
                          "\"core\"",
                          "\"pend\"",
                          "\"core_pend\"",
                          "\"max_stable_set\"",
                          "\"has_perfect_matching\"",
                          "\"alpha_plus_stable\"",
                          "\"strong_unique\"",
                          "\"bipartition_sizes\"",
                          "\"core_pend_distance_parities\""};
    std::size_t last = 0;
    for (const char* key : keys) {
        const std::size_t pos = json.find(key, last);
        REQUIRE(pos != std::string::npos);
        last = pos;
    }
    CHECK(json.find("\"strong_unique\": true") != std::string::npos);
    CHECK(json.find("\"has_perfect_matching\": false") != std::string::npos);
}

TEST_CASE("find_even_core_pendant_pair") {
    CHECK(find_even_core_pendant_pair(fixtures::path(3)) == std::pair<Vertex, Vertex>{0, 2});
    CHECK(!find_even_core_pendant_pair(fixtures::path(4)).has_value());

    // The two outer leaves of the k=2 spider are its core pendants; they sit
    // at distance 4, which is even.
    const auto pair = find_even_core_pendant_pair(spider(2));
    REQUIRE(pair.has_value());
    CHECK(*pair == std::pair<Vertex, Vertex>{3, 4});
    CHECK(distance(spider(2), pair->first, pair->second) == 4);

    const auto deep = find_even_core_pendant_pair(fixtures::two_core_pendants_tree());
    REQUIRE(deep.has_value());
    CHECK(*deep == std::pair<Vertex, Vertex>{0, 3});
    CHECK(distance(fixtures::two_core_pendants_tree(), 0, 3) == 6);
}
