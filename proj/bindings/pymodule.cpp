// Python bindings for the main operations. Structured results (reports,
// verdicts) come back as plain dicts, decoded from the same serializers the
// CLI uses so both surfaces stay in lockstep.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stablecore/core_analysis.hpp"
#include "stablecore/graph.hpp"
#include "stablecore/graph_io.hpp"
#include "stablecore/stable_sets.hpp"
#include "stablecore/theorems.hpp"

namespace py = pybind11;
using namespace stablecore;

namespace {

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.push_back(make_edge(a, b));
    return edges;
}

std::vector<std::pair<int, int>> edges_to_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

TheoremId theorem_or_throw(const std::string& name) {
    const auto id = theorem_from_name(name);
    if (!id) throw py::value_error("unknown theorem: " + name);
    return *id;
}

SweepPlan plan_from_args(const std::string& mode, int min_n, int max_n, int n,
                         long long count, std::uint64_t seed,
                         const std::vector<std::string>& theorems) {
    SweepPlan plan;
    if (mode == "exhaustive") {
        plan.mode = SweepPlan::Mode::exhaustive;
        plan.min_n = min_n;
        plan.max_n = max_n;
    } else if (mode == "random") {
        plan.mode = SweepPlan::Mode::random;
        plan.n = n;
        plan.count = count;
        plan.seed = seed;
    } else {
        throw py::value_error("mode must be 'exhaustive' or 'random'");
    }
    for (const std::string& name : theorems)
        plan.theorems.push_back(theorem_or_throw(name));
    return plan;
}

}  // namespace

PYBIND11_MODULE(_stablecore, m) {
    m.doc() = "maximum-stable-set structure of trees";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, edges_from_pairs(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) { return edges_to_pairs(g.edges()); })
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 const auto nb = g.neighbors(v);
                 return std::vector<Vertex>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("is_connected", &Graph::is_connected)
        .def("is_acyclic", &Graph::is_acyclic)
        .def("with_edge", &Graph::with_edge, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", m=" << g.edge_count() << ")";
            return out.str();
        });

    py::class_<Tree>(m, "Tree")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Tree(n, edges_from_pairs(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def(py::init<Graph>(), py::arg("graph"))
        .def_property_readonly("order", &Tree::order)
        .def_property_readonly("graph", &Tree::graph)
        .def_property_readonly("edges",
                               [](const Tree& t) { return edges_to_pairs(t.edges()); })
        .def("degree", &Tree::degree, py::arg("v"))
        .def("__repr__", [](const Tree& t) {
            std::ostringstream out;
            out << "Tree(n=" << t.order() << ")";
            return out.str();
        });

    py::class_<Forest>(m, "Forest")
        .def(py::init<Graph>(), py::arg("graph"))
        .def(py::init<const Tree&>(), py::arg("tree"))
        .def_property_readonly("order", &Forest::order)
        .def_property_readonly("graph", &Forest::graph);
    py::implicitly_convertible<Tree, Forest>();
    py::implicitly_convertible<Graph, Forest>();

    // graph-core operations
    m.def("pendant_vertices", &pendant_vertices, py::arg("graph"));
    m.def("bipartition",
          [](const Tree& t) {
              const Bipartition bip = bipartition(t);
              return std::pair{bip.class_a, bip.class_b};
          },
          py::arg("tree"));
    m.def("distance", &distance, py::arg("tree"), py::arg("u"), py::arg("v"));
    m.def("spider", &spider, py::arg("k"));
    m.def("prufer_decode",
          [](const std::vector<int>& seq) { return prufer_decode(seq); },
          py::arg("seq"));
    m.def("prufer_encode", &prufer_encode, py::arg("tree"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
    m.def("labeled_tree_count", &labeled_tree_count, py::arg("n"));
    m.def("labeled_tree_by_index", &labeled_tree_by_index, py::arg("n"),
          py::arg("index"));
    m.def("remove_vertices",
          [](const Graph& g, const std::vector<Vertex>& w) {
              const InducedSubgraph cut = remove_vertices(g, w);
              return py::make_tuple(cut.graph, cut.to_original, cut.from_original);
          },
          py::arg("graph"), py::arg("vertices"));
    m.def("connected_components", [](const Graph& g) {
        py::list out;
        for (const GraphComponent& c : connected_components(g))
            out.append(py::make_tuple(c.graph, c.to_original));
        return out;
    });

    // serialization
    m.def("parse_edge_list",
          [](const std::string& text) { return parse_edge_list(text); },
          py::arg("text"));
    m.def("write_edge_list", &write_edge_list, py::arg("graph"));
    m.def("graph6_decode",
          [](const std::string& text) { return graph6_decode(text); },
          py::arg("text"));
    m.def("graph6_encode", &graph6_encode, py::arg("graph"));
    m.def("dot_export",
          [](const Graph& g, const std::vector<Vertex>& core_set) {
              return dot_export(g, core_set);
          },
          py::arg("graph"), py::arg("core") = std::vector<Vertex>{});

    // stable sets
    m.def("alpha_forest", &alpha_forest, py::arg("forest"));
    m.def("max_stable_set",
          [](const Forest& f) { return max_stable_set(f).members(); },
          py::arg("forest"));
    m.def("alpha_exact", &alpha_exact, py::arg("graph"));
    m.def("enumerate_mss",
          [](const Graph& g, long long cap) {
              const OmegaSample omega = enumerate_mss(g, cap);
              py::list witnesses;
              for (const StableSet& s : omega.witnesses) witnesses.append(s.members());
              py::dict out;
              out["alpha"] = omega.alpha;
              out["witnesses"] = witnesses;
              out["complete"] = omega.complete;
              return out;
          },
          py::arg("graph"), py::arg("cap") = std::numeric_limits<long long>::max());
    m.def("extend_pendant_stable_set",
          [](const Tree& t, const std::vector<Vertex>& members) {
              return extend_pendant_stable_set(t, StableSet(t.graph(), members))
                  .members();
          },
          py::arg("tree"), py::arg("pendant_set"));
    m.def("is_stable",
          [](const Graph& g, const std::vector<Vertex>& s) { return is_stable(g, s); },
          py::arg("graph"), py::arg("vertices"));
    m.def("is_maximal_stable",
          [](const Graph& g, const std::vector<Vertex>& s) {
              return is_maximal_stable(g, s);
          },
          py::arg("graph"), py::arg("vertices"));
    m.def("enumerate_maximal_stable_sets",
          [](const Graph& g, std::optional<int> size) {
              py::list out;
              for (const StableSet& s : enumerate_maximal_stable_sets(g, size))
                  out.append(s.members());
              return out;
          },
          py::arg("graph"), py::arg("size") = py::none());

    // core analysis
    m.def("core", [](const Forest& f) { return core(f); }, py::arg("forest"));
    m.def("is_alpha_plus_stable", &is_alpha_plus_stable, py::arg("graph"));
    m.def("perfect_matching",
          [](const Tree& t) -> py::object {
              const auto matching = perfect_matching(t);
              if (!matching) return py::none();
              return py::cast(edges_to_pairs(*matching));
          },
          py::arg("tree"));
    m.def("has_perfect_matching", &has_perfect_matching, py::arg("tree"));
    m.def("is_strong_unique_independence",
          [](const Tree& t) {
              const auto [value, cond] = is_strong_unique_independence(t);
              py::dict record;
              record["unique_mss_with_stable_complement"] =
                  cond.unique_mss_with_stable_complement;
              record["pendants_in_one_class"] = cond.pendants_in_one_class;
              record["pendant_distances_even"] = cond.pendant_distances_even;
              return py::make_tuple(value, record);
          },
          py::arg("tree"));
    m.def("clique_bond",
          [](const Tree& t1, Vertex v1, const Tree& t2, Vertex v2) {
              const BondedTree b = clique_bond(t1, v1, t2, v2);
              py::dict out;
              out["tree"] = b.tree;
              out["map1"] = b.map1;
              out["map2"] = b.map2;
              out["bond_vertex"] = b.bond_vertex;
              return out;
          },
          py::arg("t1"), py::arg("v1"), py::arg("t2"), py::arg("v2"));
    m.def("split_at",
          [](const Tree& t, Vertex v, const std::vector<Vertex>& block) {
              const BondingSplit s = split_at(t, v, block);
              py::dict out;
              out["bond_vertex"] = s.bond_vertex;
              out["t1"] = s.t1;
              out["t2"] = s.t2;
              out["t1_to_parent"] = s.t1_to_parent;
              out["t2_to_parent"] = s.t2_to_parent;
              out["bond_in_t1"] = s.bond_in_t1;
              out["bond_in_t2"] = s.bond_in_t2;
              return out;
          },
          py::arg("tree"), py::arg("v"), py::arg("neighbor_block"));
    m.def("core_pendant_report",
          [](const Tree& t) { return json_loads(core_report_json(core_pendant_report(t))); },
          py::arg("tree"));
    m.def("find_even_core_pendant_pair",
          [](const Tree& t) -> py::object {
              const auto pair = find_even_core_pendant_pair(t);
              if (!pair) return py::none();
              return py::make_tuple(pair->first, pair->second);
          },
          py::arg("tree"));

    // theorem suite
    m.def("theorem_names", [] {
        std::vector<std::string> names;
        for (TheoremId id : kAllTheorems) names.emplace_back(theorem_name(id));
        return names;
    });
    m.def("verify",
          [](const std::string& name, const Tree& t) {
              const InstanceResult r = verify(theorem_or_throw(name), t);
              py::dict out;
              out["theorem"] = std::string(theorem_name(r.theorem));
              out["outcome"] = r.outcome == Outcome::pass ? "pass"
                               : r.outcome == Outcome::counterexample
                                   ? "counterexample"
                                   : "skipped";
              out["clause"] = r.clause;
              return out;
          },
          py::arg("theorem"), py::arg("tree"));
    m.def("sweep",
          [](const std::string& mode, int min_n, int max_n, int n, long long count,
             std::uint64_t seed, const std::vector<std::string>& theorems) {
              const auto records =
                  sweep(plan_from_args(mode, min_n, max_n, n, count, seed, theorems));
              py::list out;
              std::istringstream lines(verdicts_to_jsonl(records));
              std::string line;
              while (std::getline(lines, line)) out.append(json_loads(line));
              return out;
          },
          py::arg("mode") = "exhaustive", py::arg("min_n") = 2, py::arg("max_n") = 7,
          py::arg("n") = 0, py::arg("count") = 0, py::arg("seed") = 0,
          py::arg("theorems") = std::vector<std::string>{});
    m.def("open_problem_search",
          [](const std::string& k_rule, const std::string& mode, int min_n, int max_n,
             int n, long long count, std::uint64_t seed, int max_candidates) {
              KRule rule;
              if (k_rule == "half_n")
                  rule = KRule::half_n;
              else if (k_rule == "min_bipartition")
                  rule = KRule::min_bipartition;
              else
                  throw py::value_error("k_rule must be 'half_n' or 'min_bipartition'");
              const SearchReport report = open_problem_search(
                  rule, plan_from_args(mode, min_n, max_n, n, count, seed, {}),
                  max_candidates);
              return json_loads(search_report_json(report));
          },
          py::arg("k_rule"), py::arg("mode") = "exhaustive", py::arg("min_n") = 2,
          py::arg("max_n") = 8, py::arg("n") = 0, py::arg("count") = 0,
          py::arg("seed") = 0, py::arg("max_candidates") = 100);
}
