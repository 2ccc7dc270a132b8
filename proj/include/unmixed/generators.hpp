#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unmixed/graph.hpp"
#include "unmixed/partition.hpp"

namespace unmixed {

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output
// x * 0x2545F4914F6CDD1D. Portable and seed-stable across platforms; a
// zero seed is remapped to a fixed nonzero constant because the all-zero
// state is a fixed point.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Graph together with a clique grid that is valid for it by construction.
struct Instance {
    Graph graph;
    CliqueGrid grid;
};

// K_m with its single-row grid (1 row, m columns). m >= 1.
Instance complete_graph(int m);

// Two r-cliques on vertices 0..r-1 (row 0) and r..2r-1 (row 1), plus a
// cross edge between vertex i and vertex r+j for every pair (i, j).
// Requires r >= 2 and i != j in every pair (i = j would join the two cells
// of column i).
Instance double_clique(int r, std::span<const std::pair<int, int>> cross);

// Cell (j, i) of an n-row, r-column grid is vertex j*r + i. Cross pairs
// are the vertex pairs lying in different rows and different columns,
// listed in a fixed order: rows j1 < j2, then column i1 of row j1
// ascending, then column i2 != i1 of row j2 ascending. There are
// C(n,2) * r * (r-1) of them.
std::vector<Edge> grid_cross_pairs(int r, int n);

// Random graph on the n x r grid: all row edges plus each cross pair
// independently with probability p, drawn in grid_cross_pairs order from
// one XorShift64Star stream. Equal (r, n, p, seed) give equal graphs.
// Requires r >= 2, n >= 1, p in [0, 1].
Instance random_grid_graph(int r, int n, double p, std::uint64_t seed);

// All 2^k graphs on the n x r grid, where k = C(n,2) * r * (r-1) counts
// the cross pairs. instance(mask) includes cross pair b exactly when bit b
// of mask is set, bits in grid_cross_pairs order. Throws BudgetError when
// k exceeds 24.
class GridGraphSweep {
public:
    GridGraphSweep(int r, int n);

    int optional_pair_count() const { return static_cast<int>(cross_.size()); }
    std::uint64_t size() const { return std::uint64_t{1} << cross_.size(); }
    Instance instance(std::uint64_t mask) const;

private:
    int r_;
    int n_;
    std::vector<Edge> cross_;
};

struct Fixture {
    std::string name;
    std::string text;  // graph-format source the fixture was parsed from
    Graph graph;
    std::optional<RPartition> partition;
    std::optional<CliqueGrid> grid;
};

// Names accepted by fixture(), sorted.
const std::vector<std::string>& fixture_names();

// Embedded reference graphs. Throws std::invalid_argument for an unknown
// name.
Fixture fixture(const std::string& name);

}  // namespace unmixed
