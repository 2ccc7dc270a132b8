#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unmixed/graph.hpp"

namespace unmixed {

// Partition of V(G) into r disjoint nonempty parts. Part order carries no
// meaning; use canonical_partition / same_partition to compare.
struct RPartition {
    std::vector<VertexSet> parts;

    int r() const { return static_cast<int>(parts.size()); }
};

// Sorts each part and orders parts by their smallest member.
RPartition canonical_partition(RPartition p);

bool same_partition(const RPartition& a, const RPartition& b);

struct PartitionValidation {
    bool valid = false;
    std::string error;                   // empty when valid
    std::optional<Edge> violating_edge;  // set when a part fails independence
};

// Checks that p is a proper r-partition of g with r >= 2: parts nonempty,
// disjoint, covering V(G), each part an independent set.
PartitionValidation validate_r_partition(const Graph& g, const RPartition& p);

// n x r arrangement of all vertices of a graph: each row is an r-clique
// and each column is an independent set, so the columns form a proper
// r-partition. A single-column grid is permitted (it requires an edgeless
// graph).
struct CliqueGrid {
    int rows = 0;  // n
    int cols = 0;  // r
    std::vector<Vertex> cells;  // row-major, rows*cols entries

    Vertex cell(int row, int col) const;
    std::vector<Vertex> row_vertices(int row) const;
    VertexSet column(int col) const;
    RPartition column_partition() const;
};

enum class GridViolation {
    none,
    shape,            // dimensions or cell count malformed
    duplicate_cell,   // some vertex appears twice
    coverage,         // cells are not exactly V(G)
    column_edge,      // a column is not independent
    missing_row_edge  // a row is not a clique
};

struct GridValidation {
    bool valid = false;
    GridViolation kind = GridViolation::none;
    std::string error;
};

GridValidation validate_clique_grid(const Graph& g, const CliqueGrid& grid);

enum class GridSearchOutcome {
    found,
    not_divisible,    // |V| is not a positive multiple of r
    exhausted,        // searched everything, no grid exists
    budget_exceeded
};

struct GridSearchResult {
    GridSearchOutcome outcome = GridSearchOutcome::exhausted;
    std::optional<CliqueGrid> grid;
    std::uint64_t nodes = 0;
};

// Looks for any valid r-column clique grid on g by backtracking: first
// partitions V(G) into |V|/r disjoint r-cliques, then tries to align them
// into independent columns. Deterministic; the budget counts search nodes
// across both phases.
GridSearchResult find_clique_grid(const Graph& g, int r,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// Proper 2-partition when g is bipartite with at least 2 vertices, else
// nullopt. Components are 2-colored by BFS from their smallest vertex; for
// an edgeless graph vertex n-1 is moved to the second class so both parts
// are nonempty.
std::optional<RPartition> bipartition(const Graph& g);

// All proper r-partitions of g, canonical and in lexicographic order of
// their part lists. Throws BudgetError past max_partitions.
std::vector<RPartition> enumerate_r_partitions(const Graph& g, int r,
                                               std::size_t max_partitions = kDefaultSetCap);

}  // namespace unmixed
