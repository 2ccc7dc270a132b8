#include "unmixed/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixtures_data.hpp"
#include "unmixed/io.hpp"

namespace unmixed {

namespace {

CliqueGrid row_major_grid(int rows, int cols) {
    CliqueGrid grid;
    grid.rows = rows;
    grid.cols = cols;
    grid.cells.resize(static_cast<std::size_t>(rows) * cols);
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        grid.cells[c] = static_cast<Vertex>(c);
    }
    return grid;
}

std::vector<Edge> row_clique_edges(int r, int n) {
    std::vector<Edge> edges;
    for (int j = 0; j < n; ++j) {
        for (int i1 = 0; i1 < r; ++i1) {
            for (int i2 = i1 + 1; i2 < r; ++i2) {
                edges.push_back(Edge{j * r + i1, j * r + i2});
            }
        }
    }
    return edges;
}

}  // namespace

Instance complete_graph(int m) {
    if (m < 1) {
        throw std::invalid_argument("complete graph needs m >= 1, got " + std::to_string(m));
    }
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) edges.push_back(Edge{u, v});
    }
    return Instance{Graph(m, edges), row_major_grid(1, m)};
}

Instance double_clique(int r, std::span<const std::pair<int, int>> cross) {
    if (r < 2) {
        throw std::invalid_argument("double clique needs r >= 2, got " + std::to_string(r));
    }
    std::vector<Edge> edges = row_clique_edges(r, 2);
    for (const auto& [i, j] : cross) {
        if (i < 0 || i >= r || j < 0 || j >= r) {
            throw std::invalid_argument("cross pair (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") out of range for r = " +
                                        std::to_string(r));
        }
        if (i == j) {
            throw std::invalid_argument("cross pair (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") joins both cells of a column");
        }
        edges.push_back(Edge{i, r + j});
    }
    return Instance{Graph(2 * r, edges), row_major_grid(2, r)};
}

std::vector<Edge> grid_cross_pairs(int r, int n) {
    std::vector<Edge> pairs;
    for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = j1 + 1; j2 < n; ++j2) {
            for (int i1 = 0; i1 < r; ++i1) {
                for (int i2 = 0; i2 < r; ++i2) {
                    if (i2 == i1) continue;
                    pairs.push_back(Edge{j1 * r + i1, j2 * r + i2});
                }
            }
        }
    }
    return pairs;
}

Instance random_grid_graph(int r, int n, double p, std::uint64_t seed) {
    if (r < 2 || n < 1) {
        throw std::invalid_argument("random grid graph needs r >= 2 and n >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    std::vector<Edge> edges = row_clique_edges(r, n);
    XorShift64Star rng(seed);
    for (const Edge& pair : grid_cross_pairs(r, n)) {
        if (rng.next_unit() < p) edges.push_back(pair);
    }
    return Instance{Graph(n * r, edges), row_major_grid(n, r)};
}

GridGraphSweep::GridGraphSweep(int r, int n) : r_(r), n_(n) {
    if (r < 2 || n < 1) {
        throw std::invalid_argument("grid sweep needs r >= 2 and n >= 1");
    }
    cross_ = grid_cross_pairs(r, n);
    if (cross_.size() > 24) {
        throw BudgetError("sweep over " + std::to_string(cross_.size()) +
                          " cross pairs exceeds the 24-bit cap");
    }
}

Instance GridGraphSweep::instance(std::uint64_t mask) const {
    if (mask >= size()) {
        throw std::out_of_range("mask " + std::to_string(mask) + " out of range, sweep has " +
                                std::to_string(size()) + " instances");
    }
    std::vector<Edge> edges = row_clique_edges(r_, n_);
    for (std::size_t b = 0; b < cross_.size(); ++b) {
        if (mask >> b & 1) edges.push_back(cross_[b]);
    }
    return Instance{Graph(n_ * r_, edges), row_major_grid(n_, r_)};
}

namespace {

const char* fixture_text(const std::string& name) {
    if (name == "example_3_3") return fixtures::kExample33;
    if (name == "example_3_1_left") return fixtures::kExample31Left;
    if (name == "example_3_1_right") return fixtures::kExample31Right;
    if (name == "section_2_tripartite") return fixtures::kSection2Tripartite;
    return nullptr;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "example_3_1_left",
        "example_3_1_right",
        "example_3_3",
        "section_2_tripartite",
    };
    return names;
}

Fixture fixture(const std::string& name) {
    const char* text = fixture_text(name);
    if (!text) {
        std::string known;
        for (const std::string& n : fixture_names()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw std::invalid_argument("unknown fixture '" + name + "' (known: " + known + ")");
    }
    ParsedInput parsed = parse_graph_text(text);
    return Fixture{name, text, std::move(parsed.graph), std::move(parsed.partition),
                   std::move(parsed.grid)};
}

}  // namespace unmixed
