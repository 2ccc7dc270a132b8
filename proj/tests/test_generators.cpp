#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "unmixed/generators.hpp"
#include "unmixed/io.hpp"
#include "unmixed/partition.hpp"

using namespace unmixed;

TEST_CASE("xorshift64* is deterministic and full-range") {
    XorShift64Star a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t next = a.next();
        CHECK(next == b.next());
        double unit = c.next_unit();
        CHECK(unit >= 0.0);
        CHECK(unit < 1.0);
    }
    // Zero seed must not freeze the stream.
    XorShift64Star zero(0);
    CHECK(zero.next() != 0);
    CHECK(zero.next() != zero.next());
}

TEST_CASE("complete graphs carry their single-row grid") {
    for (int m : {1, 4, 7}) {
        Instance inst = complete_graph(m);
        CHECK(inst.graph.vertex_count() == m);
        CHECK(inst.graph.edge_count() == m * (m - 1) / 2);
        CHECK(inst.grid.rows == 1);
        CHECK(inst.grid.cols == m);
        CHECK(validate_clique_grid(inst.graph, inst.grid).valid);
    }
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("double clique wires cross edges by index pair") {
    std::vector<std::pair<int, int>> cross{{0, 3}, {1, 0}, {2, 1}, {3, 2}};
    Instance inst = double_clique(4, cross);
    CHECK(inst.graph.vertex_count() == 8);
    CHECK(inst.graph.edge_count() == 6 + 6 + 4);
    CHECK(inst.graph.has_edge(0, 7));
    CHECK(inst.graph.has_edge(1, 4));
    CHECK_FALSE(inst.graph.has_edge(0, 4));
    CHECK(validate_clique_grid(inst.graph, inst.grid).valid);

    // No cross edges at all is fine; a column pair is not.
    CHECK(validate_clique_grid(double_clique(2, {}).graph, double_clique(2, {}).grid).valid);
    std::vector<std::pair<int, int>> diag{{1, 1}};
    CHECK_THROWS_AS(double_clique(3, diag), std::invalid_argument);
    std::vector<std::pair<int, int>> oob{{0, 5}};
    CHECK_THROWS_AS(double_clique(3, oob), std::invalid_argument);
    CHECK_THROWS_AS(double_clique(1, {}), std::invalid_argument);
}

TEST_CASE("the two double-clique fixtures equal their generator outputs") {
    std::vector<std::pair<int, int>> right{{0, 3}, {1, 0}, {2, 1}, {3, 2}};
    CHECK(fixture("example_3_1_right").graph.edges() == double_clique(4, right).graph.edges());

    std::vector<std::pair<int, int>> left{{0, 2}, {0, 3}, {1, 0}, {1, 3},
                                          {2, 0}, {2, 1}, {3, 1}, {3, 2}};
    CHECK(fixture("example_3_1_left").graph.edges() == double_clique(4, left).graph.edges());
}

TEST_CASE("cross pair listing is ordered and counted") {
    CHECK(grid_cross_pairs(2, 1).empty());
    CHECK(grid_cross_pairs(2, 2) == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(grid_cross_pairs(2, 3).size() == 6);   // C(3,2)*2*1
    CHECK(grid_cross_pairs(3, 2).size() == 6);   // C(2,2)*3*2
    CHECK(grid_cross_pairs(4, 3).size() == 36);  // C(3,2)*4*3
    // No pair repeats and none lies inside a row or column.
    std::vector<Edge> pairs = grid_cross_pairs(3, 3);
    std::set<Edge> unique(pairs.begin(), pairs.end());
    CHECK(unique.size() == pairs.size());
    for (const Edge& e : pairs) {
        CHECK(e.u / 3 != e.v / 3);
        CHECK(e.u % 3 != e.v % 3);
    }
}

TEST_CASE("random grid graphs are reproducible with valid grids") {
    Instance a = random_grid_graph(3, 2, 0.5, 42);
    Instance b = random_grid_graph(3, 2, 0.5, 42);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.graph.edges() != random_grid_graph(3, 2, 0.5, 43).graph.edges());
    CHECK(validate_clique_grid(a.graph, a.grid).valid);

    // Pinned regression: this exact instance has the 6 row edges plus one
    // cross edge 0-4.
    CHECK(a.graph.edge_count() == 7);
    CHECK(a.graph.has_edge(0, 4));

    // Probability extremes pin the edge count exactly.
    CHECK(random_grid_graph(3, 4, 0.0, 9).graph.edge_count() == 4 * 3);
    CHECK(random_grid_graph(3, 4, 1.0, 9).graph.edge_count() == 4 * 3 + 6 * 3 * 2);

    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = random_grid_graph(4, 3, 0.4, 1000 + trial);
        CHECK(validate_clique_grid(inst.graph, inst.grid).valid);
    }

    CHECK_THROWS_AS(random_grid_graph(1, 2, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_grid_graph(2, 2, 1.5, 1), std::invalid_argument);
}

TEST_CASE("exhaustive sweep hits every cross subset once") {
    GridGraphSweep sweep(2, 2);
    CHECK(sweep.optional_pair_count() == 2);
    CHECK(sweep.size() == 4);
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t mask = 0; mask < sweep.size(); ++mask) {
        Instance inst = sweep.instance(mask);
        CHECK(validate_clique_grid(inst.graph, inst.grid).valid);
        seen.insert(inst.graph.edges());
    }
    CHECK(seen.size() == 4);
    CHECK_THROWS_AS(sweep.instance(4), std::out_of_range);

    CHECK(GridGraphSweep(2, 1).size() == 1);
    CHECK(GridGraphSweep(3, 1).size() == 1);
    CHECK(GridGraphSweep(2, 3).size() == 64);
    // 30 optional pairs blow the 24-bit cap.
    CHECK_THROWS_AS(GridGraphSweep(2, 6), BudgetError);
}

TEST_CASE("fixtures parse with their declared structures") {
    CHECK(fixture_names() == std::vector<std::string>{"example_3_1_left", "example_3_1_right",
                                                      "example_3_3", "section_2_tripartite"});
    CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);

    Fixture ex33 = fixture("example_3_3");
    CHECK(ex33.graph.vertex_count() == 6);
    CHECK(ex33.graph.edge_count() == 10);
    REQUIRE(ex33.partition.has_value());
    CHECK(ex33.partition->parts ==
          std::vector<VertexSet>{{0}, {1, 3}, {2}, {4, 5}});
    CHECK(validate_r_partition(ex33.graph, *ex33.partition).valid);
    CHECK_FALSE(ex33.grid.has_value());

    Fixture fig = fixture("section_2_tripartite");
    CHECK(fig.graph.edge_count() == 5);
    CHECK_FALSE(fig.partition.has_value());
    CHECK_FALSE(fig.grid.has_value());

    for (const char* name : {"example_3_1_left", "example_3_1_right"}) {
        Fixture fx = fixture(name);
        REQUIRE(fx.partition.has_value());
        REQUIRE(fx.grid.has_value());
        CHECK(validate_r_partition(fx.graph, *fx.partition).valid);
        CHECK(validate_clique_grid(fx.graph, *fx.grid).valid);
        CHECK(same_partition(*fx.partition, fx.grid->column_partition()));
    }

    // The embedded text is the parser input, verbatim.
    ParsedInput reparsed = parse_graph_text(fixture("example_3_3").text);
    CHECK(reparsed.graph.edges() == ex33.graph.edges());
}
