"""Smoke tests for the python bindings: each main operation runs end to end
and returns sane values on small hand-checked inputs."""

import pytest

import stablecore as sc


def path(n):
    return sc.Tree(n, [(v, v + 1) for v in range(n - 1)])


def test_graph_basics():
    g = sc.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4
    assert g.edge_count == 3
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 3)
    assert g.neighbors(1) == [0, 2]
    assert g.is_connected() and g.is_acyclic()
    with pytest.raises(ValueError):
        sc.Graph(2, [(0, 0)])


def test_tree_structure():
    t = path(4)
    assert sc.pendant_vertices(t.graph) == [0, 3]
    a, b = sc.bipartition(t)
    assert a == [0, 2] and b == [1, 3]
    assert sc.distance(t, 0, 3) == 3
    with pytest.raises(ValueError):
        sc.Tree(4, [(0, 1), (2, 3)])


def test_spider_and_prufer():
    s = sc.spider(3)
    assert s.order == 7
    assert s.degree(0) == 3
    assert sc.prufer_encode(sc.prufer_decode([1])) == [1]
    t = sc.random_tree(20, 9)
    assert sc.prufer_decode(sc.prufer_encode(t)).edges == t.edges
    assert sc.random_tree(20, 9).edges == t.edges


def test_stable_set_operations():
    t = path(4)
    assert sc.alpha_forest(t) == 2
    assert sc.alpha_exact(t.graph) == 2
    omega = sc.enumerate_mss(t.graph)
    assert omega["alpha"] == 2
    assert omega["witnesses"] == [[0, 2], [0, 3], [1, 3]]
    assert omega["complete"]
    assert sc.max_stable_set(path(3)) == [0, 2]
    assert sc.is_stable(t.graph, [0, 2])
    assert not sc.is_stable(t.graph, [0, 1])
    assert sc.is_maximal_stable(t.graph, [0, 2])
    assert sc.enumerate_maximal_stable_sets(t.graph) == [[0, 2], [0, 3], [1, 3]]
    assert sc.extend_pendant_stable_set(t, [0, 3]) == [0, 3]


def test_core_analysis():
    assert sc.core(path(3)) == [0, 2]
    assert sc.core(path(4)) == []
    assert sc.has_perfect_matching(path(4))
    assert sc.perfect_matching(path(3)) is None
    assert sc.perfect_matching(path(2)) == [(0, 1)]
    assert sc.is_alpha_plus_stable(path(4).graph)
    value, record = sc.is_strong_unique_independence(path(3))
    assert value and record["pendant_distances_even"]

    report = sc.core_pendant_report(path(4))
    assert report["alpha"] == 2
    assert report["core"] == []
    assert report["has_perfect_matching"] is True

    assert sc.find_even_core_pendant_pair(path(3)) == (0, 2)
    assert sc.find_even_core_pendant_pair(path(4)) is None


def test_bond_and_split():
    p3 = path(3)
    bonded = sc.clique_bond(p3, 2, p3, 0)
    assert bonded["tree"].order == 5
    split = sc.split_at(bonded["tree"], 2, [1])
    assert split["t1"].order == 3
    assert split["t2"].order == 3


def test_serialization():
    t = path(5)
    text = sc.write_edge_list(t.graph)
    assert sc.parse_edge_list(text).edges == t.graph.edges
    assert sc.graph6_decode(sc.graph6_encode(t.graph)).edges == t.graph.edges
    dot = sc.dot_export(t.graph, core=[0])
    assert "shape=box" in dot and "style=filled" in dot


def test_theorem_suite():
    assert "th6" in sc.theorem_names()
    assert sc.verify("th6", path(3))["outcome"] == "pass"
    assert sc.verify("even_dist", sc.spider(2))["outcome"] == "counterexample"
    with pytest.raises(ValueError):
        sc.verify("nope", path(3))

    records = sc.sweep(mode="exhaustive", min_n=2, max_n=4, theorems=["th7", "berge_pend"])
    assert {r["theorem"] for r in records} == {"th7", "berge_pend"}
    assert all(r["verdict"] == "pass" for r in records)
    assert records[0]["instances_checked"] == 1 + 3 + 16

    search = sc.open_problem_search("half_n", max_n=4)
    assert search["trees_seen"] == 1 + 3 + 16
    assert "pendant_count_distribution" in search
