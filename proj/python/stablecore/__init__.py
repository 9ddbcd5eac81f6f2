"""Maximum-stable-set structure of trees.

Thin wrapper over the compiled extension; see the individual functions'
docstrings (mirroring the C++ API) for details.
"""

from stablecore._stablecore import (  # noqa: F401
    Forest,
    Graph,
    Tree,
    alpha_exact,
    alpha_forest,
    bipartition,
    clique_bond,
    connected_components,
    core,
    core_pendant_report,
    distance,
    dot_export,
    enumerate_maximal_stable_sets,
    enumerate_mss,
    extend_pendant_stable_set,
    find_even_core_pendant_pair,
    graph6_decode,
    graph6_encode,
    has_perfect_matching,
    is_alpha_plus_stable,
    is_maximal_stable,
    is_stable,
    is_strong_unique_independence,
    labeled_tree_by_index,
    labeled_tree_count,
    max_stable_set,
    open_problem_search,
    parse_edge_list,
    pendant_vertices,
    perfect_matching,
    prufer_decode,
    prufer_encode,
    random_tree,
    remove_vertices,
    spider,
    split_at,
    sweep,
    theorem_names,
    verify,
    write_edge_list,
)

__all__ = [
    "Forest",
    "Graph",
    "Tree",
    "alpha_exact",
    "alpha_forest",
    "bipartition",
    "clique_bond",
    "connected_components",
    "core",
    "core_pendant_report",
    "distance",
    "dot_export",
    "enumerate_maximal_stable_sets",
    "enumerate_mss",
    "extend_pendant_stable_set",
    "find_even_core_pendant_pair",
    "graph6_decode",
    "graph6_encode",
    "has_perfect_matching",
    "is_alpha_plus_stable",
    "is_maximal_stable",
    "is_stable",
    "is_strong_unique_independence",
    "labeled_tree_by_index",
    "labeled_tree_count",
    "max_stable_set",
    "open_problem_search",
    "parse_edge_list",
    "pendant_vertices",
    "perfect_matching",
    "prufer_decode",
    "prufer_encode",
    "random_tree",
    "remove_vertices",
    "spider",
    "split_at",
    "sweep",
    "theorem_names",
    "verify",
    "write_edge_list",
]
