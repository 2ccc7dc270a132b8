#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unmixed/cli.hpp"
#include "unmixed/generators.hpp"
#include "unmixed/io.hpp"

using namespace unmixed;
using nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::filesystem::path temp_dir() {
    static std::filesystem::path dir = [] {
        std::filesystem::path p =
            std::filesystem::temp_directory_path() / "unmixed_cli_tests";
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::filesystem::path path = temp_dir() / name;
    std::ofstream file(path, std::ios::binary);
    file << text;
    return path.string();
}

ordered_json parse_report(const RunResult& result) {
    REQUIRE(!result.out.empty());
    return ordered_json::parse(result.out);
}

}  // namespace

TEST_CASE("check census on an unmixed graph") {
    std::string path = write_file("ex33.graph", fixture("example_3_3").text);
    RunResult r = run({"check", path, "--json"});
    CHECK(r.code == 0);
    ordered_json report = parse_report(r);
    CHECK(report["command"] == "check");
    CHECK(report["verdict"] == true);
    CHECK(report["census_summary"]["vertices"] == 6);
    CHECK(report["census_summary"]["edges"] == 10);
    CHECK(report["census_summary"]["minimal_cover_count"] == 5);
    CHECK(report["census_summary"]["size_histogram"] == ordered_json{{"4", 5}});
    CHECK(report["census_summary"]["covering_number"] == 4);
    CHECK(report["census_summary"]["independence_number"] == 2);
    CHECK(report["witnesses"].empty());
    CHECK(report["tool_version"] == kToolVersion);
    std::string digest = report["input_digest"];
    CHECK(digest.rfind("fnv1a64:", 0) == 0);
    CHECK(digest.size() == 8 + 16);

    // Report keys come in a fixed order.
    std::vector<std::string> keys;
    for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "input_digest", "verdict", "witnesses",
                                           "census_summary", "timing_ms", "tool_version"});
}

TEST_CASE("check exits 1 on a mixed graph and shows two cover sizes") {
    std::string path = write_file("p3.graph", "graph 3\ne 0 1\ne 1 2\n");
    RunResult r = run({"check", path, "--json"});
    CHECK(r.code == 1);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == false);
    CHECK(report["census_summary"]["size_histogram"] ==
          ordered_json{{"1", 1}, {"2", 1}});
    CHECK(report["witnesses"]["smaller_cover"] == ordered_json::array({"1"}));
    CHECK(report["witnesses"]["larger_cover"] == ordered_json::array({"0", "2"}));

    // Human rendering carries the same verdict.
    RunResult human = run({"check", path});
    CHECK(human.code == 1);
    CHECK(human.out.find("verdict: false") != std::string::npos);
}

TEST_CASE("check exits 2 on bad input") {
    std::string path = write_file("bad.graph", "graph 2\ne 0 5\n");
    RunResult r = run({"check", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(r.err.find("line 2") != std::string::npos);

    RunResult missing = run({"check", (temp_dir() / "absent.graph").string()});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("theorem trusts declared rows and can verify against the oracle") {
    std::string path = write_file("left.graph", fixture("example_3_1_left").text);
    RunResult r = run({"theorem", path, "--verify", "--json"});
    CHECK(r.code == 0);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == true);
    CHECK(report["census_summary"]["grid_source"] == "declared");
    CHECK(report["census_summary"]["rows"] == 2);
    CHECK(report["census_summary"]["cols"] == 4);
    CHECK(report["census_summary"]["oracle_unmixed"] == true);
    CHECK(report["census_summary"]["oracle_agrees"] == true);
    CHECK(report["witnesses"].empty());
}

TEST_CASE("theorem searches for a grid when rows are absent") {
    std::string path = write_file(
        "k4.graph", "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    RunResult r = run({"theorem", path, "--r", "4", "--json"});
    CHECK(r.code == 0);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == true);
    CHECK(report["census_summary"]["grid_source"] == "search");
    CHECK(report["census_summary"]["rows"] == 1);
    CHECK(report["census_summary"]["cols"] == 4);
    CHECK(report["census_summary"]["search_nodes"].get<std::uint64_t>() >= 1);
}

TEST_CASE("theorem reports the first counterexample tuple") {
    std::string path = write_file("mixed_grid.graph",
                                  "graph 6\n"
                                  "e 0 1\ne 2 3\ne 4 5\ne 0 3\ne 2 5\n"
                                  "row 0: 0 1\nrow 1: 2 3\nrow 2: 4 5\n");
    RunResult r = run({"theorem", path, "--json"});
    CHECK(r.code == 1);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == false);
    const ordered_json& w = report["witnesses"]["counterexample"];
    CHECK(w["row"] == 2);
    CHECK(w["chosen"] == ordered_json::array({"5", "0"}));
    CHECK(w["tuple"] == ordered_json::array({"0", "5"}));
}

TEST_CASE("theorem exits 2 when no grid can be used") {
    std::string left = write_file("left2.graph", fixture("example_3_1_left").text);
    RunResult contradiction = run({"theorem", left, "--r", "3"});
    CHECK(contradiction.code == 2);
    CHECK(contradiction.err.find("contradicts") != std::string::npos);

    std::string ex33 = write_file("ex33b.graph", fixture("example_3_3").text);
    RunResult no_r = run({"theorem", ex33});
    CHECK(no_r.code == 2);
    CHECK(no_r.err.find("pass --r") != std::string::npos);
    RunResult indivisible = run({"theorem", ex33, "--r", "4"});
    CHECK(indivisible.code == 2);
    CHECK(indivisible.err.find("not divisible") != std::string::npos);

    std::string c6 = write_file(
        "c6.graph", "graph 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n");
    RunResult exhausted = run({"theorem", c6, "--r", "3"});
    CHECK(exhausted.code == 2);
    CHECK(exhausted.err.find("none exists") != std::string::npos);
}

TEST_CASE("equiv exhaustive sweep covers every instance") {
    RunResult r = run({"equiv", "--r", "2", "--n", "2", "--exhaustive", "--json"});
    CHECK(r.code == 0);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == true);
    CHECK(report["census_summary"]["mode"] == "exhaustive");
    CHECK(report["census_summary"]["optional_pairs"] == 2);
    CHECK(report["census_summary"]["instances"] == 4);
    CHECK(report["census_summary"]["mismatches"] == 0);
}

TEST_CASE("equiv random sweeps are reproducible") {
    std::vector<std::string> args{"equiv", "--r",    "3",  "--n",    "2",
                                  "--samples", "40", "--seed", "7",  "--json"};
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    ordered_json a = parse_report(first);
    ordered_json b = parse_report(second);
    CHECK(a["census_summary"]["instances"] == 40);
    CHECK(a["census_summary"]["mismatches"] == 0);
    a["timing_ms"] = 0;
    b["timing_ms"] = 0;
    CHECK(a.dump() == b.dump());
}

TEST_CASE("equiv rejects missing or conflicting modes") {
    RunResult none = run({"equiv", "--r", "2", "--n", "2"});
    CHECK(none.code == 2);
    CHECK(none.err.find("--exhaustive or --samples") != std::string::npos);
    RunResult both = run(
        {"equiv", "--r", "2", "--n", "2", "--exhaustive", "--samples", "5"});
    CHECK(both.code == 2);
    CHECK(both.err.find("mutually exclusive") != std::string::npos);
}

TEST_CASE("partitions lists every proper r-partition") {
    std::string path =
        write_file("tripartite.graph", fixture("section_2_tripartite").text);
    RunResult r = run({"partitions", path, "--r", "3", "--json"});
    CHECK(r.code == 0);
    ordered_json report = parse_report(r);
    CHECK(report["verdict"] == true);
    CHECK(report["census_summary"]["count"] == 15);
    const ordered_json& list = report["witnesses"]["partitions"];
    REQUIRE(list.is_array());
    CHECK(list.size() == 15);
    ordered_json wanted = ordered_json::array(
        {ordered_json::array({"0", "1", "2"}), ordered_json::array({"3", "4"}),
         ordered_json::array({"5"})});
    bool found = false;
    for (const auto& entry : list) found = found || entry == wanted;
    CHECK(found);
}

TEST_CASE("bipartite runs the requested checker") {
    std::string c4 = write_file("c4.graph", "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");

    RunResult villarreal = run({"bipartite", c4, "--villarreal", "--json"});
    CHECK(villarreal.code == 0);
    ordered_json vreport = parse_report(villarreal);
    CHECK(vreport["verdict"] == true);
    CHECK(vreport["census_summary"]["checker"] == "villarreal");
    CHECK(vreport["witnesses"]["labeling"].size() == 2);

    RunResult ravindra = run({"bipartite", c4, "--ravindra", "--verify", "--json"});
    CHECK(ravindra.code == 0);
    ordered_json rreport = parse_report(ravindra);
    CHECK(rreport["census_summary"]["checker"] == "ravindra");
    CHECK(rreport["census_summary"]["oracle_agrees"] == true);
    CHECK(rreport["witnesses"]["certificate"]["matching"].size() == 2);
    CHECK(rreport["witnesses"]["certificate"]["neighborhood_complete"] ==
          ordered_json::array({true, true}));

    std::string p3 = write_file("p3b.graph", "graph 3\ne 0 1\ne 1 2\n");
    RunResult mixed = run({"bipartite", p3, "--villarreal"});
    CHECK(mixed.code == 1);
}

TEST_CASE("bipartite rejects bad hypotheses and flag combinations") {
    std::string k3 = write_file("k3.graph", "graph 3\ne 0 1\ne 0 2\ne 1 2\n");
    RunResult odd = run({"bipartite", k3, "--ravindra"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("hypothesis violation") != std::string::npos);

    RunResult neither = run({"bipartite", k3});
    CHECK(neither.code == 2);
    CHECK(neither.err.find("--ravindra or --villarreal") != std::string::npos);

    RunResult both = run({"bipartite", k3, "--ravindra", "--villarreal"});
    CHECK(both.code == 2);
}

TEST_CASE("gen prints instances and writes files") {
    RunResult bare = run({"gen", "--family", "complete", "--m", "3"});
    CHECK(bare.code == 0);
    ParsedInput parsed = parse_graph_text(bare.out);
    CHECK(parsed.graph.vertex_count() == 3);
    CHECK(parsed.graph.edge_count() == 3);
    REQUIRE(parsed.grid.has_value());
    CHECK(parsed.grid->rows == 1);

    RunResult fx = run({"gen", "--family", "fixture", "--name", "example_3_3"});
    CHECK(fx.code == 0);
    CHECK(fx.out == fixture("example_3_3").text);

    std::string out_path = (temp_dir() / "generated.graph").string();
    RunResult written = run({"gen", "--family", "random_star", "--r", "3", "--n", "2",
                             "--prob", "0.5", "--seed", "42", "--out", out_path, "--json"});
    CHECK(written.code == 0);
    ordered_json report = parse_report(written);
    CHECK(report["census_summary"]["out"] == out_path);
    ParsedInput reread = parse_graph_file(out_path);
    CHECK(reread.graph.edge_count() == 7);
    CHECK(reread.graph.has_edge(0, 4));
    REQUIRE(reread.grid.has_value());
    CHECK(validate_clique_grid(reread.graph, *reread.grid).valid);

    RunResult unknown = run({"gen", "--family", "petersen"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown family") != std::string::npos);

    RunResult oob = run({"gen", "--family", "exhaustive_star", "--r", "2", "--n", "2",
                         "--index", "4"});
    CHECK(oob.code == 2);
}

TEST_CASE("help and argument errors") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("check") != std::string::npos);
    CHECK(help.out.find("theorem") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
}
