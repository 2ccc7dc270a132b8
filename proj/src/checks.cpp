#include "unmixed/checks.hpp"

#include <algorithm>
#include <array>

#include "unmixed/covers.hpp"

namespace unmixed {

namespace {

void require_valid_grid(const Graph& g, const CliqueGrid& grid) {
    GridValidation v = validate_clique_grid(g, grid);
    if (!v.valid) {
        throw std::invalid_argument("invalid clique grid: " + v.error);
    }
}

// Depth-first search over one-neighbor-per-column choices for row q.
// A partial choice is extended only while its distinct vertices stay
// pairwise nonadjacent, so a full choice is already a counterexample.
struct RowScan {
    const Graph& g;
    const CliqueGrid& grid;
    int q;
    std::vector<Vertex> chosen;

    bool find_counterexample(int col) {
        if (col == grid.cols) return true;
        for (Vertex w : g.neighbors(grid.cell(q, col))) {
            bool clash = false;
            for (int prev = 0; prev < col; ++prev) {
                if (chosen[prev] != w && g.has_edge(chosen[prev], w)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            chosen[col] = w;
            if (find_counterexample(col + 1)) return true;
        }
        return false;
    }
};

}  // namespace

GridVerdict grid_condition(const Graph& g, const CliqueGrid& grid) {
    require_valid_grid(g, grid);
    for (int q = 0; q < grid.rows; ++q) {
        RowScan scan{g, grid, q, std::vector<Vertex>(grid.cols, -1)};
        if (scan.find_counterexample(0)) {
            GridWitness witness;
            witness.row_q = q + 1;
            witness.chosen = scan.chosen;
            witness.tuple = normalize_vertex_set(scan.chosen);
            return GridVerdict{false, std::move(witness)};
        }
    }
    return GridVerdict{true, std::nullopt};
}

bool is_unmixed_with_grid(const Graph& g, const CliqueGrid& grid) {
    return grid_condition(g, grid).holds;
}

bool grid_cover_size_check(const Graph& g, const CliqueGrid& grid, std::size_t max_sets) {
    require_valid_grid(g, grid);
    CoverCensus census = is_unmixed_bruteforce(g, max_sets);
    if (!census.is_unmixed) {
        throw HypothesisError("graph is not unmixed");
    }
    int expected_cover = (grid.cols - 1) * grid.rows;
    for (const VertexSet& cover : census.minimal_vertex_covers) {
        if (static_cast<int>(cover.size()) != expected_cover) return false;
    }
    return census.independence_number == grid.rows;
}

namespace {

struct MatchingEnum {
    const Graph& g;
    std::size_t cap;
    std::vector<char> covered;
    std::vector<Edge> current;
    std::vector<std::vector<Edge>> out;

    MatchingEnum(const Graph& graph, std::size_t max_matchings)
        : g(graph), cap(max_matchings), covered(graph.vertex_count(), 0) {}

    // Matches the lowest uncovered vertex with each uncovered neighbor in
    // turn. Fixing the lowest vertex means no matching is found twice.
    void recurse() {
        Vertex u = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!covered[v]) {
                u = v;
                break;
            }
        }
        if (u < 0) {
            if (out.size() >= cap) {
                throw BudgetError("more than " + std::to_string(cap) + " perfect matchings");
            }
            out.push_back(current);
            return;
        }
        covered[u] = 1;
        for (Vertex v : g.neighbors(u)) {
            if (covered[v]) continue;
            covered[v] = 1;
            current.push_back(Edge{u, v});
            recurse();
            current.pop_back();
            covered[v] = 0;
        }
        covered[u] = 0;
    }
};

}  // namespace

std::vector<std::vector<Edge>> enumerate_perfect_matchings(const Graph& g,
                                                           std::size_t max_matchings) {
    if (g.vertex_count() % 2 != 0) return {};
    MatchingEnum walker(g, max_matchings);
    walker.recurse();
    std::sort(walker.out.begin(), walker.out.end());
    return walker.out;
}

namespace {

// N(u) x N(v) complete check behind the connected-bipartite test. In a
// bipartite graph N(u) and N(v) are disjoint independent sets, so this is
// exactly "the subgraph induced on N(u) union N(v) is complete bipartite".
bool neighborhoods_complete(const Graph& g, const Edge& e) {
    for (Vertex a : g.neighbors(e.u)) {
        for (Vertex b : g.neighbors(e.v)) {
            if (!g.has_edge(a, b)) return false;
        }
    }
    return true;
}

}  // namespace

RavindraResult ravindra_check(const Graph& g) {
    if (!is_connected(g)) {
        throw HypothesisError("requires a connected graph");
    }
    if (!bipartition(g)) {
        throw HypothesisError("requires a bipartite graph on at least 2 vertices");
    }
    std::vector<std::vector<Edge>> matchings = enumerate_perfect_matchings(g);
    if (matchings.empty()) {
        return RavindraResult{false, "no perfect matching", std::nullopt};
    }
    for (const std::vector<Edge>& matching : matchings) {
        MatchingCertificate cert;
        cert.edges = matching;
        cert.neighborhood_complete.reserve(matching.size());
        bool all = true;
        for (const Edge& e : matching) {
            bool ok = neighborhoods_complete(g, e);
            cert.neighborhood_complete.push_back(ok ? 1 : 0);
            all = all && ok;
        }
        if (all) {
            return RavindraResult{true, "", std::move(cert)};
        }
    }
    return RavindraResult{
        false, "no perfect matching has all complete bipartite neighborhoods", std::nullopt};
}

VillarrealResult villarreal_check(const Graph& g) {
    if (g.vertex_count() == 0) {
        throw HypothesisError("requires a nonempty graph");
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            throw HypothesisError("requires no isolated vertices, vertex " +
                                  std::to_string(v) + " is isolated");
        }
    }
    std::optional<RPartition> classes = bipartition(g);
    if (!classes) {
        throw HypothesisError("requires a bipartite graph");
    }
    const VertexSet& xs = classes->parts[0];
    const VertexSet& ys = classes->parts[1];
    if (xs.size() != ys.size()) {
        return VillarrealResult{false, "color classes differ in size, no perfect matching", {}};
    }
    std::vector<char> in_x(g.vertex_count(), 0);
    for (Vertex v : xs) in_x[v] = 1;

    std::vector<std::vector<Edge>> matchings = enumerate_perfect_matchings(g);
    if (matchings.empty()) {
        return VillarrealResult{false, "no perfect matching", {}};
    }
    for (const std::vector<Edge>& matching : matchings) {
        // x[i], y[i] are the endpoints of matching edge i on each side of
        // the bipartition.
        std::size_t m = matching.size();
        std::vector<Vertex> x(m), y(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (in_x[matching[i].u]) {
                x[i] = matching[i].u;
                y[i] = matching[i].v;
            } else {
                x[i] = matching[i].v;
                y[i] = matching[i].u;
            }
        }
        bool transitive = true;
        for (std::size_t i = 0; i < m && transitive; ++i) {
            for (std::size_t j = 0; j < m && transitive; ++j) {
                if (j == i || !g.has_edge(x[i], y[j])) continue;
                for (std::size_t k = 0; k < m; ++k) {
                    if (k == i || k == j) continue;
                    if (g.has_edge(x[j], y[k]) && !g.has_edge(x[i], y[k])) {
                        transitive = false;
                        break;
                    }
                }
            }
        }
        if (transitive) {
            return VillarrealResult{true, "", matching};
        }
    }
    return VillarrealResult{false, "no perfect matching satisfies the transitivity condition", {}};
}

bool haghighi_check(const Graph& g, const CliqueGrid& grid) {
    require_valid_grid(g, grid);
    if (grid.cols != 3) {
        throw std::invalid_argument("grid must have exactly 3 columns, has " +
                                    std::to_string(grid.cols));
    }
    int n = grid.rows;
    static constexpr std::array<std::array<int, 3>, 6> kPerms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    auto has_internal_edge = [&g](Vertex a, Vertex b, Vertex c) {
        return g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c);
    };

    for (int q = 0; q < n; ++q) {
        for (const auto& perm : kPerms) {
            Vertex xq = grid.cell(q, perm[0]);
            Vertex yq = grid.cell(q, perm[1]);
            Vertex zq = grid.cell(q, perm[2]);

            // Condition (1): one chosen vertex per column, rows i, j, k and
            // q pairwise distinct.
            for (int i = 0; i < n; ++i) {
                if (i == q) continue;
                Vertex ui = grid.cell(i, 0);
                if (!g.has_edge(ui, xq)) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == q || j == i) continue;
                    Vertex vj = grid.cell(j, 1);
                    if (!g.has_edge(vj, yq)) continue;
                    for (int k = 0; k < n; ++k) {
                        if (k == q || k == i || k == j) continue;
                        Vertex wk = grid.cell(k, 2);
                        if (!g.has_edge(wk, zq)) continue;
                        if (!has_internal_edge(ui, vj, wk)) return false;
                    }
                }
            }

            // Condition (2): r, s from one column class, t from another,
            // adjacent to xq, yq, zq respectively (r = s allowed).
            for (int col_rs = 0; col_rs < 3; ++col_rs) {
                for (int col_t = 0; col_t < 3; ++col_t) {
                    if (col_t == col_rs) continue;
                    for (int jr = 0; jr < n; ++jr) {
                        Vertex r = grid.cell(jr, col_rs);
                        if (!g.has_edge(r, xq)) continue;
                        for (int js = 0; js < n; ++js) {
                            Vertex s = grid.cell(js, col_rs);
                            if (!g.has_edge(s, yq)) continue;
                            for (int jt = 0; jt < n; ++jt) {
                                Vertex t = grid.cell(jt, col_t);
                                if (!g.has_edge(t, zq)) continue;
                                // r and s share a column, so the only
                                // possible edges touch t.
                                if (!g.has_edge(r, t) && !g.has_edge(s, t)) return false;
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace unmixed
