#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unmixed/graph.hpp"
#include "unmixed/partition.hpp"

namespace unmixed {

// Thrown when a characterization is asked about a graph outside its
// hypotheses (e.g. the connected-bipartite test on a disconnected graph).
// Distinct from a negative verdict.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counterexample to the row condition: chosen[i] is a neighbor of the
// column-i vertex of row row_q (1-based row index), and the set of
// distinct chosen vertices, tuple, is independent.
struct GridWitness {
    int row_q = 0;
    std::vector<Vertex> chosen;
    VertexSet tuple;
};

struct GridVerdict {
    bool holds = false;
    std::optional<GridWitness> witness;  // set iff !holds
};

// Row condition on a valid clique grid: for every row q and every choice
// of one neighbor per row-q vertex, the chosen vertices span an edge.
// Holds exactly when the graph is unmixed. The reported witness is the
// first counterexample in scan order: rows ascending, columns ascending,
// neighbors ascending. Throws std::invalid_argument on an invalid grid.
GridVerdict grid_condition(const Graph& g, const CliqueGrid& grid);

// grid_condition verdict as a plain bool.
bool is_unmixed_with_grid(const Graph& g, const CliqueGrid& grid);

// For an unmixed graph carrying a valid n x r clique grid: verifies that
// every minimal vertex cover has exactly (r-1)*n vertices and that the
// independence number is n. Throws std::invalid_argument on an invalid
// grid and HypothesisError when the graph is not unmixed.
bool grid_cover_size_check(const Graph& g, const CliqueGrid& grid,
                           std::size_t max_sets = kDefaultSetCap);

// All perfect matchings, each a sorted list of edges, the list of
// matchings in lexicographic order. A graph on zero vertices has one
// (empty) perfect matching; a graph of odd order has none.
std::vector<std::vector<Edge>> enumerate_perfect_matchings(
    const Graph& g, std::size_t max_matchings = kDefaultSetCap);

// Perfect matching together with the per-edge result of the
// complete-bipartite neighborhood test run by ravindra_check.
struct MatchingCertificate {
    std::vector<Edge> edges;
    std::vector<std::uint8_t> neighborhood_complete;  // parallel to edges
};

struct RavindraResult {
    bool unmixed = false;
    std::string reason;  // set iff !unmixed
    // First perfect matching all of whose edges pass the neighborhood
    // test; set iff unmixed.
    std::optional<MatchingCertificate> certificate;
};

// Classical test for connected bipartite graphs: unmixed iff some perfect
// matching F has, for every edge uv in F, a complete bipartite graph
// induced between N(u) and N(v). Throws HypothesisError when g is not
// connected or not bipartite (a one-vertex graph counts as not bipartite).
RavindraResult ravindra_check(const Graph& g);

struct VillarrealResult {
    bool unmixed = false;
    std::string reason;          // set iff !unmixed
    std::vector<Edge> labeling;  // witnessing perfect matching, set iff unmixed
};

// Classical test for bipartite graphs without isolated vertices: unmixed
// iff some perfect matching {x_1,y_1},...,{x_g,y_g} (x-side in one color
// class, y-side in the other) satisfies, for all distinct i, j, k: if
// x_i y_j and x_j y_k are edges then so is x_i y_k. Throws HypothesisError
// on an empty graph, an isolated vertex, or a non-bipartite graph.
VillarrealResult villarreal_check(const Graph& g);

// Classical two-part test for a valid 3-column clique grid; equivalent to
// grid_condition there. Writing row q as (u_q, v_q, w_q) by column and
// letting (x_q, y_q, z_q) range over its permutations:
//   (1) for distinct i, j, k, q: u_i ~ x_q, v_j ~ y_q, w_k ~ z_q forces an
//       edge inside {u_i, v_j, w_k};
//   (2) for r, s in one column class and t in another: r ~ x_q, s ~ y_q,
//       t ~ z_q forces an edge inside {r, s, t} (r = s allowed).
// Throws std::invalid_argument unless the grid is valid with 3 columns.
bool haghighi_check(const Graph& g, const CliqueGrid& grid);

}  // namespace unmixed
