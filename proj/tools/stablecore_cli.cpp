// Command-line frontend: analyze / verify / search / generate / convert.
//
// Exit codes: 0 success or all-pass, 1 counterexample found, 2 input error,
// 3 invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stablecore/core_analysis.hpp"
#include "stablecore/graph.hpp"
#include "stablecore/graph_io.hpp"
#include "stablecore/stable_sets.hpp"
#include "stablecore/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvariant = 3;

struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw stablecore::parse_error("cannot open input file: " + path, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

stablecore::Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = slurp(path);
    if (format == "graph6") return stablecore::graph6_decode(text);
    return stablecore::parse_edge_list(text);
}

stablecore::Tree to_tree(const stablecore::Graph& g) {
    if (!g.is_connected()) throw invariant_error("input is not a tree: disconnected");
    if (g.edge_count() != g.order() - 1)
        throw invariant_error("input is not a tree: cycle found");
    if (g.order() < 2) throw invariant_error("input is not a tree: order < 2");
    return stablecore::Tree(g);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw stablecore::parse_error("cannot open output file: " + output_path, 0);
    out << text;
}

struct VerifyOptions {
    bool exhaustive = false;
    bool random = false;
    int min_n = 2;
    int max_n = 7;
    int n = 0;
    long long count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> theorems;
    std::string output;
};

stablecore::SweepPlan build_plan(const VerifyOptions& opt) {
    stablecore::SweepPlan plan;
    if (opt.random && opt.exhaustive)
        throw stablecore::parse_error("--exhaustive and --random are exclusive", 0);
    if (opt.random) {
        plan.mode = stablecore::SweepPlan::Mode::random;
        if (opt.n < 2) throw stablecore::parse_error("--random requires --n >= 2", 0);
        if (opt.count <= 0)
            throw stablecore::parse_error("--random requires --count >= 1", 0);
        plan.n = opt.n;
        plan.count = opt.count;
        plan.seed = opt.seed;
    } else {
        plan.mode = stablecore::SweepPlan::Mode::exhaustive;
        plan.min_n = opt.min_n;
        plan.max_n = opt.max_n;
    }
    for (const std::string& name : opt.theorems) {
        const auto id = stablecore::theorem_from_name(name);
        if (!id) throw stablecore::parse_error("unknown theorem: " + name, 0);
        plan.theorems.push_back(*id);
    }
    return plan;
}

int cmd_analyze(const std::string& input, const std::string& format,
                const std::string& output) {
    const stablecore::Tree tree = to_tree(load_graph(input, format));
    const stablecore::CoreReport report = stablecore::core_pendant_report(tree);
    emit(stablecore::core_report_json(report), output);
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
    const stablecore::SweepPlan plan = build_plan(opt);
    const std::vector<stablecore::VerdictRecord> records = stablecore::sweep(plan);
    const std::string jsonl = stablecore::verdicts_to_jsonl(records);
    const std::string table = stablecore::sweep_summary_table(records);
    if (opt.output.empty()) {
        std::cout << jsonl;
        std::cerr << table;
    } else {
        emit(jsonl, opt.output);
        std::cout << table;
    }
    for (const auto& r : records)
        if (!r.pass) return kExitCounterexample;
    return kExitOk;
}

int cmd_search(const VerifyOptions& opt, const std::string& rule_name,
               int max_candidates) {
    stablecore::KRule rule;
    if (rule_name == "half-n")
        rule = stablecore::KRule::half_n;
    else if (rule_name == "min-bipartition")
        rule = stablecore::KRule::min_bipartition;
    else
        throw stablecore::parse_error("unknown k-rule: " + rule_name, 0);
    const stablecore::SweepPlan plan = build_plan(opt);
    const stablecore::SearchReport report =
        stablecore::open_problem_search(rule, plan, max_candidates);
    emit(stablecore::search_report_json(report), opt.output);
    return kExitOk;
}

std::string render(const stablecore::Graph& g, const std::string& format) {
    if (format == "graph6") return stablecore::graph6_encode(g) + "\n";
    if (format == "dot") return stablecore::dot_export(g);
    return stablecore::write_edge_list(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-stable-set structure of trees"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "structural report of one tree");
    std::string an_input, an_format = "edge-list", an_output;
    analyze->add_option("input", an_input, "input file, or - for stdin")->required();
    analyze->add_option("--format", an_format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    analyze->add_option("--output", an_output, "write the JSON report here");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem verifiers over trees");
    VerifyOptions vo;
    verify->add_flag("--exhaustive", vo.exhaustive, "all labeled trees in [min-n, max-n]");
    verify->add_flag("--random", vo.random, "seeded random trees");
    verify->add_option("--min-n", vo.min_n, "smallest order (exhaustive mode)");
    verify->add_option("--max-n", vo.max_n, "largest order (exhaustive mode)");
    verify->add_option("--n", vo.n, "tree order (random mode)");
    verify->add_option("--count", vo.count, "number of trees (random mode)");
    verify->add_option("--seed", vo.seed, "base seed (random mode)");
    verify->add_option("--theorem", vo.theorems, "restrict to these theorems");
    verify->add_option("--output", vo.output, "write the JSON-lines report here");

    // search
    auto* search = app.add_subcommand("search", "open-problem data sweep");
    VerifyOptions so;
    so.max_n = 8;
    std::string k_rule = "half-n";
    int max_candidates = 100;
    search->add_option("--k-rule", k_rule, "half-n or min-bipartition")
        ->check(CLI::IsMember({"half-n", "min-bipartition"}));
    search->add_flag("--random", so.random, "seeded random trees");
    search->add_option("--min-n", so.min_n, "smallest order (exhaustive mode)");
    search->add_option("--max-n", so.max_n, "largest order (exhaustive mode)");
    search->add_option("--n", so.n, "tree order (random mode)");
    search->add_option("--count", so.count, "number of trees (random mode)");
    search->add_option("--seed", so.seed, "base seed (random mode)");
    search->add_option("--max-candidates", max_candidates,
                       "cap on stored count<=1 trees");
    search->add_option("--output", so.output, "write the JSON report here");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a tree");
    int spider_k = 0;
    std::vector<long long> random_args;
    std::vector<int> prufer_seq;
    std::string gen_format = "edge-list", gen_output;
    auto* spider_opt = generate->add_option("--spider", spider_k, "spider with k legs");
    auto* random_opt =
        generate->add_option("--random", random_args, "random tree: n seed")
            ->expected(2);
    auto* prufer_opt =
        generate->add_option("--prufer", prufer_seq, "decode a Prufer sequence")
            ->expected(-1);
    generate->add_option("--format", gen_format, "edge-list, graph6 or dot")
        ->check(CLI::IsMember({"edge-list", "graph6", "dot"}));
    generate->add_option("--output", gen_output, "write here instead of stdout");

    // convert
    auto* convert = app.add_subcommand("convert", "translate between graph formats");
    std::string cv_input, cv_from = "edge-list", cv_to = "edge-list", cv_output;
    bool cv_with_core = false;
    convert->add_option("input", cv_input, "input file, or - for stdin")->required();
    convert->add_option("--from", cv_from, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    convert->add_option("--to", cv_to, "edge-list, graph6 or dot")
        ->check(CLI::IsMember({"edge-list", "graph6", "dot"}));
    convert->add_flag("--with-core", cv_with_core,
                      "style the core in DOT output (tree input only)");
    convert->add_option("--output", cv_output, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(an_input, an_format, an_output);
        if (app.got_subcommand(verify)) return cmd_verify(vo);
        if (app.got_subcommand(search)) return cmd_search(so, k_rule, max_candidates);
        if (app.got_subcommand(generate)) {
            const int sources = (spider_opt->count() > 0) + (random_opt->count() > 0) +
                                (prufer_opt->count() > 0);
            if (sources != 1)
                throw stablecore::parse_error(
                    "generate needs exactly one of --spider, --random, --prufer", 0);
            std::optional<stablecore::Tree> tree;
            if (spider_opt->count() > 0) {
                tree = stablecore::spider(spider_k);
            } else if (random_opt->count() > 0) {
                tree = stablecore::random_tree(
                    static_cast<int>(random_args[0]),
                    static_cast<std::uint64_t>(random_args[1]));
            } else {
                tree = stablecore::prufer_decode(prufer_seq);
            }
            emit(render(tree->graph(), gen_format), gen_output);
            return kExitOk;
        }
        if (app.got_subcommand(convert)) {
            const stablecore::Graph g = load_graph(cv_input, cv_from);
            std::string text;
            if (cv_with_core) {
                if (cv_to != "dot")
                    throw stablecore::parse_error("--with-core applies to --to dot", 0);
                const stablecore::Tree tree = to_tree(g);
                const std::vector<stablecore::Vertex> core_set =
                    stablecore::core(stablecore::Forest(tree));
                text = stablecore::dot_export(g, core_set);
            } else {
                text = render(g, cv_to);
            }
            emit(text, cv_output);
            return kExitOk;
        }
        return kExitInputError;
    } catch (const stablecore::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
