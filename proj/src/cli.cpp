#include "unmixed/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unmixed/checks.hpp"
#include "unmixed/covers.hpp"
#include "unmixed/generators.hpp"
#include "unmixed/graph.hpp"
#include "unmixed/io.hpp"
#include "unmixed/partition.hpp"

namespace unmixed {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a64_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

// Reports carry vertex names as they appear in input files; the file
// format names vertices by their decimal index.
std::string vertex_name(Vertex v) { return std::to_string(v); }

ordered_json name_array(const std::vector<Vertex>& vs) {
    ordered_json arr = ordered_json::array();
    for (Vertex v : vs) arr.push_back(vertex_name(v));
    return arr;
}

ordered_json edge_array(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : edges) {
        arr.push_back(ordered_json::array({vertex_name(e.u), vertex_name(e.v)}));
    }
    return arr;
}

ordered_json histogram_json(const std::map<int, int>& histogram) {
    ordered_json obj = ordered_json::object();
    for (const auto& [size, count] : histogram) {
        obj[std::to_string(size)] = count;
    }
    return obj;
}

ordered_json make_report(const std::string& command, const std::string& digest_source) {
    ordered_json report;
    report["command"] = command;
    report["input_digest"] = fnv1a64_digest(digest_source);
    report["verdict"] = nullptr;
    report["witnesses"] = ordered_json::object();
    report["census_summary"] = ordered_json::object();
    report["timing_ms"] = 0;
    report["tool_version"] = kToolVersion;
    return report;
}

// The human format prints every fact the JSON report carries, flattened.
void render_human(const ordered_json& report, std::ostream& out) {
    for (const auto& [key, value] : report.items()) {
        if (value.is_object() || value.is_array()) {
            if (value.empty()) continue;
            out << key << ":\n";
            std::istringstream lines(value.dump(2));
            std::string line;
            while (std::getline(lines, line)) out << "  " << line << '\n';
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << key << ": " << value.dump() << '\n';
        }
    }
}

struct CommonOptions {
    bool json = false;
    std::size_t max_sets = kDefaultSetCap;
    std::uint64_t max_nodes = kDefaultNodeBudget;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(ordered_json& report, const Timer& timer, const CommonOptions& common,
          std::ostream& out) {
    report["timing_ms"] = timer.elapsed_ms();
    if (common.json) {
        out << report.dump(2) << '\n';
    } else {
        render_human(report, out);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

int cmd_check(const std::string& path, const CommonOptions& common, std::ostream& out) {
    Timer timer;
    std::string text = read_file(path);
    ordered_json report = make_report("check", text);
    ParsedInput parsed = parse_graph_text(text);

    CoverCensus census = is_unmixed_bruteforce(parsed.graph, common.max_sets);
    report["verdict"] = census.is_unmixed;
    ordered_json& summary = report["census_summary"];
    summary["vertices"] = parsed.graph.vertex_count();
    summary["edges"] = parsed.graph.edge_count();
    summary["minimal_cover_count"] = census.minimal_vertex_covers.size();
    summary["size_histogram"] = histogram_json(census.size_histogram);
    summary["covering_number"] = census.covering_number;
    summary["independence_number"] = census.independence_number;
    if (!census.is_unmixed) {
        // Two covers of different sizes certify the verdict.
        const auto& covers = census.minimal_vertex_covers;
        auto [small, large] = std::minmax_element(
            covers.begin(), covers.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
        report["witnesses"]["smaller_cover"] = name_array(*small);
        report["witnesses"]["larger_cover"] = name_array(*large);
    }
    emit(report, timer, common, out);
    return census.is_unmixed ? 0 : 1;
}

int cmd_theorem(const std::string& path, std::optional<int> r, bool verify,
                const CommonOptions& common, std::ostream& out, std::ostream& err) {
    Timer timer;
    std::string text = read_file(path);
    ordered_json report = make_report("theorem", text);
    ParsedInput parsed = parse_graph_text(text);
    const Graph& g = parsed.graph;

    CliqueGrid grid;
    ordered_json& summary = report["census_summary"];
    if (parsed.grid) {
        if (r && *r != parsed.grid->cols) {
            err << "--r " << *r << " contradicts the declared rows with " << parsed.grid->cols
                << " columns\n";
            return 2;
        }
        GridValidation validation = validate_clique_grid(g, *parsed.grid);
        if (!validation.valid) {
            err << "declared rows are not a valid clique grid: " << validation.error << '\n';
            return 2;
        }
        grid = *parsed.grid;
        summary["grid_source"] = "declared";
    } else {
        if (!r) {
            err << "no row lines in input; pass --r to search for a clique grid\n";
            return 2;
        }
        GridSearchResult search = find_clique_grid(g, *r, common.max_nodes);
        summary["grid_source"] = "search";
        summary["search_nodes"] = search.nodes;
        switch (search.outcome) {
            case GridSearchOutcome::found:
                grid = *search.grid;
                break;
            case GridSearchOutcome::not_divisible:
                err << "no clique grid: " << g.vertex_count() << " vertices not divisible by "
                    << *r << '\n';
                return 2;
            case GridSearchOutcome::exhausted:
                err << "no clique grid: search exhausted, none exists for r = " << *r << '\n';
                return 2;
            case GridSearchOutcome::budget_exceeded:
                err << "no clique grid found within " << common.max_nodes << " search nodes\n";
                return 2;
        }
    }
    summary["rows"] = grid.rows;
    summary["cols"] = grid.cols;

    GridVerdict verdict = grid_condition(g, grid);
    report["verdict"] = verdict.holds;
    if (verdict.witness) {
        ordered_json w;
        w["row"] = verdict.witness->row_q;
        w["chosen"] = name_array(verdict.witness->chosen);
        w["tuple"] = name_array(verdict.witness->tuple);
        report["witnesses"]["counterexample"] = std::move(w);
    }
    if (verify) {
        bool oracle = is_unmixed_bruteforce(g, common.max_sets).is_unmixed;
        summary["oracle_unmixed"] = oracle;
        summary["oracle_agrees"] = (oracle == verdict.holds);
    }
    emit(report, timer, common, out);
    return verdict.holds ? 0 : 1;
}

struct EquivOptions {
    int r = 0;
    int n = 0;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    double prob = 0.5;
    std::uint64_t seed = 1;
};

int cmd_equiv(const EquivOptions& opts, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
    Timer timer;
    std::ostringstream digest_source;
    digest_source << "equiv r=" << opts.r << " n=" << opts.n;
    if (opts.exhaustive) {
        digest_source << " exhaustive";
    } else {
        digest_source << " samples=" << opts.samples << " prob=" << opts.prob << " seed=" << opts.seed;
    }
    ordered_json report = make_report("equiv", digest_source.str());
    ordered_json& summary = report["census_summary"];
    summary["r"] = opts.r;
    summary["n"] = opts.n;
    summary["mode"] = opts.exhaustive ? "exhaustive" : "random";

    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;

    auto compare_one = [&](const Instance& inst, const std::string& label) {
        ++instances;
        bool fast = grid_condition(inst.graph, inst.grid).holds;
        bool oracle = is_unmixed_bruteforce(inst.graph, common.max_sets).is_unmixed;
        if (fast == oracle) return;
        ++mismatches;
        if (!report["witnesses"].contains("first_mismatch")) {
            ordered_json w;
            w["instance"] = label;
            w["grid_verdict"] = fast;
            w["oracle_verdict"] = oracle;
            w["graph"] = to_graph_text(inst.graph, nullptr, &inst.grid);
            report["witnesses"]["first_mismatch"] = std::move(w);
        }
    };

    if (opts.exhaustive) {
        GridGraphSweep sweep(opts.r, opts.n);
        summary["optional_pairs"] = sweep.optional_pair_count();
        for (std::uint64_t mask = 0; mask < sweep.size(); ++mask) {
            compare_one(sweep.instance(mask), "mask " + std::to_string(mask));
        }
    } else {
        if (opts.samples == 0) {
            err << "random mode needs --samples > 0\n";
            return 2;
        }
        // Per-instance seeds come from a master stream so one flag seeds
        // the whole sweep reproducibly.
        XorShift64Star master(opts.seed);
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            Instance inst = random_grid_graph(opts.r, opts.n, opts.prob, master.next());
            compare_one(inst, "sample " + std::to_string(s));
        }
    }

    summary["instances"] = instances;
    summary["mismatches"] = mismatches;
    report["verdict"] = (mismatches == 0);
    emit(report, timer, common, out);
    return mismatches == 0 ? 0 : 1;
}

int cmd_partitions(const std::string& path, int r, const CommonOptions& common,
                   std::ostream& out) {
    Timer timer;
    std::string text = read_file(path);
    ordered_json report = make_report("partitions", text);
    ParsedInput parsed = parse_graph_text(text);

    std::vector<RPartition> partitions =
        enumerate_r_partitions(parsed.graph, r, common.max_sets);
    report["verdict"] = true;
    report["census_summary"]["r"] = r;
    report["census_summary"]["count"] = partitions.size();
    ordered_json list = ordered_json::array();
    for (const RPartition& p : partitions) {
        ordered_json parts = ordered_json::array();
        for (const VertexSet& part : p.parts) parts.push_back(name_array(part));
        list.push_back(std::move(parts));
    }
    report["witnesses"]["partitions"] = std::move(list);
    emit(report, timer, common, out);
    return 0;
}

int cmd_bipartite(const std::string& path, bool use_ravindra, bool verify,
                  const CommonOptions& common, std::ostream& out) {
    Timer timer;
    std::string text = read_file(path);
    ordered_json report = make_report("bipartite", text);
    ParsedInput parsed = parse_graph_text(text);
    const Graph& g = parsed.graph;
    ordered_json& summary = report["census_summary"];

    bool verdict = false;
    if (use_ravindra) {
        summary["checker"] = "ravindra";
        RavindraResult result = ravindra_check(g);
        verdict = result.unmixed;
        if (!result.reason.empty()) summary["reason"] = result.reason;
        if (result.certificate) {
            ordered_json cert;
            cert["matching"] = edge_array(result.certificate->edges);
            ordered_json flags = ordered_json::array();
            for (std::uint8_t ok : result.certificate->neighborhood_complete) {
                flags.push_back(ok != 0);
            }
            cert["neighborhood_complete"] = std::move(flags);
            report["witnesses"]["certificate"] = std::move(cert);
        }
    } else {
        summary["checker"] = "villarreal";
        VillarrealResult result = villarreal_check(g);
        verdict = result.unmixed;
        if (!result.reason.empty()) summary["reason"] = result.reason;
        if (!result.labeling.empty()) {
            report["witnesses"]["labeling"] = edge_array(result.labeling);
        }
    }
    report["verdict"] = verdict;
    if (verify) {
        bool oracle = is_unmixed_bruteforce(g, common.max_sets).is_unmixed;
        summary["oracle_unmixed"] = oracle;
        summary["oracle_agrees"] = (oracle == verdict);
    }
    emit(report, timer, common, out);
    return verdict ? 0 : 1;
}

struct GenOptions {
    std::string family;
    int m = 0;
    int r = 0;
    int n = 1;
    double prob = 0.5;
    std::uint64_t seed = 1;
    std::uint64_t index = 0;
    std::string cross;
    std::string name;
    std::string out_path;
};

std::vector<std::pair<int, int>> parse_cross_pairs(const std::string& text) {
    // Comma-separated i:j items, e.g. "0:3,1:0,2:1,3:2".
    std::vector<std::pair<int, int>> pairs;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("cross pair '" + item + "' is not of the form i:j");
        }
        try {
            int i = std::stoi(item.substr(0, colon));
            int j = std::stoi(item.substr(colon + 1));
            pairs.emplace_back(i, j);
        } catch (const std::exception&) {
            throw std::invalid_argument("cross pair '" + item + "' is not of the form i:j");
        }
    }
    return pairs;
}

int cmd_gen(const GenOptions& opts, const CommonOptions& common, std::ostream& out) {
    Timer timer;
    std::ostringstream digest_source;
    digest_source << "gen family=" << opts.family;

    std::string text;
    if (opts.family == "complete") {
        digest_source << " m=" << opts.m;
        Instance inst = complete_graph(opts.m);
        text = to_graph_text(inst.graph, nullptr, &inst.grid);
    } else if (opts.family == "double_clique") {
        digest_source << " r=" << opts.r << " cross=" << opts.cross;
        std::vector<std::pair<int, int>> pairs = parse_cross_pairs(opts.cross);
        Instance inst = double_clique(opts.r, pairs);
        text = to_graph_text(inst.graph, nullptr, &inst.grid);
    } else if (opts.family == "random_star") {
        digest_source << " r=" << opts.r << " n=" << opts.n << " prob=" << opts.prob
             << " seed=" << opts.seed;
        Instance inst = random_grid_graph(opts.r, opts.n, opts.prob, opts.seed);
        text = to_graph_text(inst.graph, nullptr, &inst.grid);
    } else if (opts.family == "exhaustive_star") {
        digest_source << " r=" << opts.r << " n=" << opts.n << " index=" << opts.index;
        GridGraphSweep sweep(opts.r, opts.n);
        Instance inst = sweep.instance(opts.index);
        text = to_graph_text(inst.graph, nullptr, &inst.grid);
    } else if (opts.family == "fixture") {
        digest_source << " name=" << opts.name;
        text = fixture(opts.name).text;
    } else {
        throw std::invalid_argument(
            "unknown family '" + opts.family +
            "' (known: complete, double_clique, random_star, exhaustive_star, fixture)");
    }

    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write '" + opts.out_path + "'");
        }
        file << text;
    }

    if (!common.json && opts.out_path.empty()) {
        // Bare gen prints the instance itself; that is the useful output.
        out << text;
        return 0;
    }
    ordered_json report = make_report("gen", digest_source.str());
    report["verdict"] = true;
    report["census_summary"]["bytes"] = text.size();
    if (!opts.out_path.empty()) {
        report["census_summary"]["out"] = opts.out_path;
    } else {
        report["witnesses"]["graph"] = text;
    }
    emit(report, timer, common, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"well-covered (unmixed) graph toolkit"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_flag("--json", common.json, "emit the report as JSON");
    app.add_option("--max-sets", common.max_sets,
                   "cap on enumerated sets, partitions and matchings")
        ->capture_default_str();
    app.add_option("--max-nodes", common.max_nodes, "node budget for the clique grid search")
        ->capture_default_str();

    std::string file;
    std::optional<int> theorem_r;
    int partitions_r = 0;
    bool verify = false;
    bool use_ravindra = false;
    bool use_villarreal = false;
    EquivOptions equiv;
    GenOptions gen;

    CLI::App* check = app.add_subcommand("check", "brute-force unmixedness census");
    check->add_option("file", file, "graph file")->required();

    CLI::App* theorem = app.add_subcommand(
        "theorem", "fast unmixedness decision through a clique grid");
    theorem->add_option("file", file, "graph file")->required();
    theorem->add_option("--r", theorem_r, "columns of the grid to search for");
    theorem->add_flag("--verify", verify, "also run the brute-force oracle");

    CLI::App* equiv_cmd = app.add_subcommand(
        "equiv", "sweep instances comparing the grid decision with the oracle");
    equiv_cmd->add_option("--r", equiv.r, "columns")->required();
    equiv_cmd->add_option("--n", equiv.n, "rows")->required();
    equiv_cmd->add_flag("--exhaustive", equiv.exhaustive, "all cross-edge subsets");
    equiv_cmd->add_option("--samples", equiv.samples, "number of random instances");
    equiv_cmd->add_option("--prob", equiv.prob, "cross-edge probability")
        ->capture_default_str();
    equiv_cmd->add_option("--seed", equiv.seed, "sweep seed")->capture_default_str();

    CLI::App* partitions = app.add_subcommand("partitions", "list all proper r-partitions");
    partitions->add_option("file", file, "graph file")->required();
    partitions->add_option("--r", partitions_r, "number of parts")->required();

    CLI::App* bipartite = app.add_subcommand(
        "bipartite", "classical bipartite unmixedness characterizations");
    bipartite->add_option("file", file, "graph file")->required();
    CLI::Option* rav = bipartite->add_flag("--ravindra", use_ravindra,
                                           "perfect matching + complete neighborhoods test");
    CLI::Option* vil = bipartite->add_flag("--villarreal", use_villarreal,
                                           "perfect matching + transitivity test");
    rav->excludes(vil);
    vil->excludes(rav);
    bipartite->add_flag("--verify", verify, "also run the brute-force oracle");

    CLI::App* gen_cmd = app.add_subcommand("gen", "write generated instances in graph format");
    gen_cmd->add_option("--family", gen.family,
                        "complete | double_clique | random_star | exhaustive_star | fixture")
        ->required();
    gen_cmd->add_option("--m", gen.m, "order of the complete graph");
    gen_cmd->add_option("--r", gen.r, "columns");
    gen_cmd->add_option("--n", gen.n, "rows")->capture_default_str();
    gen_cmd->add_option("--prob", gen.prob, "cross-edge probability")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--index", gen.index, "instance index within an exhaustive sweep");
    gen_cmd->add_option("--cross", gen.cross, "double-clique cross pairs, e.g. 0:3,1:0");
    gen_cmd->add_option("--name", gen.name, "fixture name");
    gen_cmd->add_option("--out", gen.out_path, "output file (default: stdout)");

    for (CLI::App* sub : {check, theorem, equiv_cmd, partitions, bipartite, gen_cmd}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(file, common, out);
        if (theorem->parsed()) return cmd_theorem(file, theorem_r, verify, common, out, err);
        if (equiv_cmd->parsed()) {
            if (!equiv.exhaustive && equiv.samples == 0) {
                err << "equiv needs --exhaustive or --samples\n";
                return 2;
            }
            if (equiv.exhaustive && equiv.samples > 0) {
                err << "--exhaustive and --samples are mutually exclusive\n";
                return 2;
            }
            return cmd_equiv(equiv, common, out, err);
        }
        if (partitions->parsed()) return cmd_partitions(file, partitions_r, common, out);
        if (bipartite->parsed()) {
            if (!use_ravindra && !use_villarreal) {
                err << "bipartite needs --ravindra or --villarreal\n";
                return 2;
            }
            return cmd_bipartite(file, use_ravindra, verify, common, out);
        }
        if (gen_cmd->parsed()) return cmd_gen(gen, common, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        err << "hypothesis violation: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace unmixed
