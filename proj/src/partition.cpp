#include "unmixed/partition.hpp"

#include <algorithm>
#include <numeric>

namespace unmixed {

RPartition canonical_partition(RPartition p) {
    for (VertexSet& part : p.parts) {
        std::sort(part.begin(), part.end());
    }
    std::sort(p.parts.begin(), p.parts.end());
    return p;
}

bool same_partition(const RPartition& a, const RPartition& b) {
    return canonical_partition(a).parts == canonical_partition(b).parts;
}

PartitionValidation validate_r_partition(const Graph& g, const RPartition& p) {
    PartitionValidation result;
    if (p.r() < 2) {
        result.error = "need at least 2 parts, got " + std::to_string(p.r());
        return result;
    }
    std::vector<int> owner(g.vertex_count(), -1);
    for (int i = 0; i < p.r(); ++i) {
        const VertexSet& part = p.parts[i];
        if (part.empty()) {
            result.error = "part " + std::to_string(i) + " is empty";
            return result;
        }
        for (Vertex v : part) {
            if (v < 0 || v >= g.vertex_count()) {
                result.error = "part " + std::to_string(i) + " contains out-of-range vertex " +
                               std::to_string(v);
                return result;
            }
            if (owner[v] >= 0) {
                result.error = "vertex " + std::to_string(v) + " appears in parts " +
                               std::to_string(owner[v]) + " and " + std::to_string(i);
                return result;
            }
            owner[v] = i;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (owner[v] < 0) {
            result.error = "vertex " + std::to_string(v) + " is not in any part";
            return result;
        }
    }
    for (const Edge& e : g.edges()) {
        if (owner[e.u] == owner[e.v]) {
            result.error = "part " + std::to_string(owner[e.u]) +
                           " is not independent: edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v);
            result.violating_edge = e;
            return result;
        }
    }
    result.valid = true;
    return result;
}

Vertex CliqueGrid::cell(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * cols + col];
}

std::vector<Vertex> CliqueGrid::row_vertices(int row) const {
    std::vector<Vertex> out(cols);
    for (int i = 0; i < cols; ++i) out[i] = cell(row, i);
    return out;
}

VertexSet CliqueGrid::column(int col) const {
    std::vector<Vertex> out(rows);
    for (int j = 0; j < rows; ++j) out[j] = cell(j, col);
    return normalize_vertex_set(std::move(out));
}

RPartition CliqueGrid::column_partition() const {
    RPartition p;
    p.parts.reserve(cols);
    for (int i = 0; i < cols; ++i) p.parts.push_back(column(i));
    return p;
}

GridValidation validate_clique_grid(const Graph& g, const CliqueGrid& grid) {
    GridValidation result;
    auto fail = [&result](GridViolation kind, std::string message) {
        result.kind = kind;
        result.error = std::move(message);
        return result;
    };

    if (grid.rows < 1 || grid.cols < 1 ||
        grid.cells.size() != static_cast<std::size_t>(grid.rows) * grid.cols) {
        return fail(GridViolation::shape, "grid dimensions do not match cell count");
    }
    if (grid.cells.size() != static_cast<std::size_t>(g.vertex_count())) {
        return fail(GridViolation::coverage,
                    "grid has " + std::to_string(grid.cells.size()) + " cells for " +
                        std::to_string(g.vertex_count()) + " vertices");
    }
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex v : grid.cells) {
        if (v < 0 || v >= g.vertex_count()) {
            return fail(GridViolation::coverage,
                        "cell vertex " + std::to_string(v) + " out of range");
        }
        if (seen[v]) {
            return fail(GridViolation::duplicate_cell,
                        "vertex " + std::to_string(v) + " appears in two cells");
        }
        seen[v] = 1;
    }
    for (int i = 0; i < grid.cols; ++i) {
        for (int j1 = 0; j1 < grid.rows; ++j1) {
            for (int j2 = j1 + 1; j2 < grid.rows; ++j2) {
                if (g.has_edge(grid.cell(j1, i), grid.cell(j2, i))) {
                    return fail(GridViolation::column_edge,
                                "column " + std::to_string(i) + " has edge " +
                                    std::to_string(grid.cell(j1, i)) + "-" +
                                    std::to_string(grid.cell(j2, i)));
                }
            }
        }
    }
    for (int j = 0; j < grid.rows; ++j) {
        for (int i1 = 0; i1 < grid.cols; ++i1) {
            for (int i2 = i1 + 1; i2 < grid.cols; ++i2) {
                if (!g.has_edge(grid.cell(j, i1), grid.cell(j, i2))) {
                    return fail(GridViolation::missing_row_edge,
                                "row " + std::to_string(j) + " misses edge " +
                                    std::to_string(grid.cell(j, i1)) + "-" +
                                    std::to_string(grid.cell(j, i2)));
                }
            }
        }
    }
    result.valid = true;
    return result;
}

namespace {

// Shared state for the two-phase grid search. Phase 1 greedily partitions
// V(G) into |V|/r disjoint r-cliques (always extending from the lowest
// unassigned vertex, candidates in increasing order). Phase 2 permutes the
// members of each clique so every column is independent; the first clique
// keeps its sorted order, which fixes one representative per column
// relabeling class.
struct GridSearch {
    const Graph& g;
    int r;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<std::vector<Vertex>> cliques;  // phase 1 output, in progress
    std::vector<char> assigned;
    CliqueGrid found;

    GridSearch(const Graph& graph, int cols, std::uint64_t node_budget)
        : g(graph), r(cols), budget(node_budget), assigned(graph.vertex_count(), 0) {}

    bool tick() {
        if (nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        ++nodes;
        return true;
    }

    bool phase1() {
        if (!tick()) return false;
        Vertex pivot = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!assigned[v]) {
                pivot = v;
                break;
            }
        }
        if (pivot < 0) return phase2();

        std::vector<Vertex> clique{pivot};
        assigned[pivot] = 1;
        bool done = extend_clique(clique, pivot);
        assigned[pivot] = 0;
        return done;
    }

    bool extend_clique(std::vector<Vertex>& clique, Vertex last) {
        if (static_cast<int>(clique.size()) == r) {
            cliques.push_back(clique);
            bool done = phase1();
            cliques.pop_back();
            return done;
        }
        if (!tick()) return false;
        for (Vertex v = last + 1; v < g.vertex_count(); ++v) {
            if (assigned[v]) continue;
            bool ok = true;
            for (Vertex u : clique) {
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            clique.push_back(v);
            assigned[v] = 1;
            if (extend_clique(clique, v)) return true;
            assigned[v] = 0;
            clique.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }

    // rows[j][i] holds the vertex placed in column i of row j.
    std::vector<std::vector<Vertex>> rows;

    bool phase2() {
        rows.assign(cliques.size(), {});
        return place_row(0);
    }

    bool column_ok(int row, const std::vector<Vertex>& arrangement) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < row; ++j) {
                if (g.has_edge(arrangement[i], rows[j][i])) return false;
            }
        }
        return true;
    }

    bool place_row(int row) {
        if (row == static_cast<int>(cliques.size())) {
            found.rows = row;
            found.cols = r;
            found.cells.clear();
            for (const auto& arranged : rows) {
                found.cells.insert(found.cells.end(), arranged.begin(), arranged.end());
            }
            return true;
        }
        std::vector<Vertex> arrangement = cliques[row];  // already sorted
        if (row == 0) {
            if (!tick()) return false;
            rows[0] = arrangement;
            if (place_row(1)) return true;
            return false;
        }
        do {
            if (!tick()) return false;
            if (!column_ok(row, arrangement)) continue;
            rows[row] = arrangement;
            if (place_row(row + 1)) return true;
            if (out_of_budget) return false;
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        return false;
    }
};

}  // namespace

GridSearchResult find_clique_grid(const Graph& g, int r, std::uint64_t node_budget) {
    GridSearchResult result;
    if (r < 1) {
        throw std::invalid_argument("column count must be positive, got " + std::to_string(r));
    }
    if (g.vertex_count() == 0 || g.vertex_count() % r != 0) {
        result.outcome = GridSearchOutcome::not_divisible;
        return result;
    }
    GridSearch search(g, r, node_budget);
    bool hit = search.phase1();
    result.nodes = search.nodes;
    if (hit) {
        result.outcome = GridSearchOutcome::found;
        result.grid = search.found;
    } else if (search.out_of_budget) {
        result.outcome = GridSearchOutcome::budget_exceeded;
    } else {
        result.outcome = GridSearchOutcome::exhausted;
    }
    return result;
}

std::optional<RPartition> bipartition(const Graph& g) {
    if (g.vertex_count() < 2) return std::nullopt;
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<Vertex> queue{start};
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex cur = queue[head++];
            for (Vertex nbr : g.neighbors(cur)) {
                if (color[nbr] < 0) {
                    color[nbr] = 1 - color[cur];
                    queue.push_back(nbr);
                } else if (color[nbr] == color[cur]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
    }
    RPartition p;
    p.parts.assign(2, {});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        p.parts[color[v]].push_back(v);
    }
    if (p.parts[1].empty()) {
        // Edgeless graph: every vertex got color 0. Split so both classes
        // are nonempty.
        p.parts[1].push_back(p.parts[0].back());
        p.parts[0].pop_back();
    }
    return p;
}

namespace {

// Restricted-growth enumeration: vertex 0 goes to part 0, and vertex v may
// open part k only when parts 0..k-1 are already open. Every set partition
// into exactly r blocks is produced once, with blocks ordered by smallest
// member, so the output needs no deduplication.
struct PartitionEnum {
    const Graph& g;
    int r;
    std::size_t cap;
    std::vector<int> assignment;
    std::vector<RPartition> out;

    PartitionEnum(const Graph& graph, int parts, std::size_t max_partitions)
        : g(graph), r(parts), cap(max_partitions), assignment(graph.vertex_count(), -1) {}

    bool part_accepts(int part, Vertex v) {
        for (Vertex u = 0; u < v; ++u) {
            if (assignment[u] == part && g.has_edge(u, v)) return false;
        }
        return true;
    }

    void recurse(Vertex v, int open) {
        if (v == g.vertex_count()) {
            if (open != r) return;
            if (out.size() >= cap) {
                throw BudgetError("more than " + std::to_string(cap) + " proper partitions");
            }
            RPartition p;
            p.parts.assign(r, {});
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                p.parts[assignment[u]].push_back(u);
            }
            out.push_back(std::move(p));
            return;
        }
        // Even if every remaining vertex opens a new part we must reach r.
        if (open + (g.vertex_count() - v) < r) return;
        int limit = std::min(open, r - 1);
        for (int part = 0; part <= limit; ++part) {
            if (!part_accepts(part, v)) continue;
            assignment[v] = part;
            recurse(v + 1, part == open ? open + 1 : open);
            assignment[v] = -1;
        }
    }
};

}  // namespace

std::vector<RPartition> enumerate_r_partitions(const Graph& g, int r,
                                               std::size_t max_partitions) {
    if (r < 2) {
        throw std::invalid_argument("need at least 2 parts, got " + std::to_string(r));
    }
    if (g.vertex_count() < r) return {};
    PartitionEnum walker(g, r, max_partitions);
    walker.recurse(0, 0);
    std::sort(walker.out.begin(), walker.out.end(),
              [](const RPartition& a, const RPartition& b) { return a.parts < b.parts; });
    return walker.out;
}

}  // namespace unmixed
