#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unmixed/graph.hpp"
#include "unmixed/partition.hpp"

namespace unmixed {

struct ParseError : std::runtime_error {
    int line;  // 1-based line number of the offending input line

    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

struct ParsedInput {
    Graph graph;
    // Declared `part` / `row` lines, shape-checked only; run
    // validate_r_partition / validate_clique_grid for the graph-theoretic
    // properties.
    std::optional<RPartition> partition;
    std::optional<CliqueGrid> grid;
    std::vector<std::string> warnings;  // e.g. deduplicated edges
};

// Line-based graph format:
//   graph <n>            vertex count, first directive
//   e <u> <v>            edge, 0-based endpoints, u != v
//   part <i>: <v...>     optional, part i of a partition, i in 0..r-1
//   row <j>: <v...>      optional, row j of a clique grid, j in 0..rows-1
// '#' starts a comment running to end of line; blank lines are skipped;
// the ':' after part/row indices is optional. Duplicate edges produce a
// warning and are merged; self-loops are errors.
ParsedInput parse_graph_text(std::string_view text);

// Reads the whole file and delegates to parse_graph_text. Throws
// std::runtime_error when the file cannot be read.
ParsedInput parse_graph_file(const std::string& path);

// Serializes in the same format, edges in sorted order. Comments are
// emitted first, one '# ' line each. parse_graph_text inverts this.
std::string to_graph_text(const Graph& g, const RPartition* partition = nullptr,
                          const CliqueGrid* grid = nullptr,
                          std::span<const std::string> comments = {});

}  // namespace unmixed
