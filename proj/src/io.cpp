#include "unmixed/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace unmixed {

namespace {

std::vector<std::string> tokenize(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ':', ' ');
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(std::move(token));
    return tokens;
}

int parse_int(const std::string& token, int line_no) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    return value;
}

struct IndexedLine {
    int index;
    std::vector<Vertex> members;
    int line_no;
};

// part/row declarations may appear in any order; indices must form exactly
// 0..count-1.
void check_contiguous(const std::vector<IndexedLine>& lines, const char* what) {
    std::vector<char> seen(lines.size(), 0);
    for (const IndexedLine& l : lines) {
        if (l.index < 0 || l.index >= static_cast<int>(lines.size())) {
            throw ParseError(l.line_no, std::string(what) + " index " +
                                            std::to_string(l.index) + " out of range 0.." +
                                            std::to_string(lines.size() - 1));
        }
        if (seen[l.index]) {
            throw ParseError(l.line_no,
                             std::string(what) + " " + std::to_string(l.index) + " declared twice");
        }
        seen[l.index] = 1;
    }
}

}  // namespace

ParsedInput parse_graph_text(std::string_view text) {
    ParsedInput result;
    std::optional<int> vertex_count;
    std::vector<Edge> edges;
    std::vector<IndexedLine> part_lines;
    std::vector<IndexedLine> row_lines;

    std::istringstream input{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];

        if (directive == "graph") {
            if (vertex_count) throw ParseError(line_no, "duplicate graph line");
            if (tokens.size() != 2) throw ParseError(line_no, "expected: graph <n>");
            int n = parse_int(tokens[1], line_no);
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            vertex_count = n;
            continue;
        }
        if (!vertex_count) {
            throw ParseError(line_no, "'" + directive + "' before the graph line");
        }

        auto check_vertex = [&](int v) {
            if (v < 0 || v >= *vertex_count) {
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 0.." +
                                              std::to_string(*vertex_count - 1));
            }
            return v;
        };

        if (directive == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected: e <u> <v>");
            int u = check_vertex(parse_int(tokens[1], line_no));
            int v = check_vertex(parse_int(tokens[2], line_no));
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            Edge e = make_edge(u, v);
            if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
                result.warnings.push_back("line " + std::to_string(line_no) +
                                          ": duplicate edge " + std::to_string(u) + " " +
                                          std::to_string(v) + " ignored");
            } else {
                edges.push_back(e);
            }
        } else if (directive == "part" || directive == "row") {
            if (tokens.size() < 3) {
                throw ParseError(line_no, "expected: " + directive + " <i>: <members>");
            }
            IndexedLine decl;
            decl.index = parse_int(tokens[1], line_no);
            decl.line_no = line_no;
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                decl.members.push_back(check_vertex(parse_int(tokens[t], line_no)));
            }
            (directive == "part" ? part_lines : row_lines).push_back(std::move(decl));
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    if (!vertex_count) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing graph line");
    }
    result.graph = Graph(*vertex_count, edges);

    if (!part_lines.empty()) {
        check_contiguous(part_lines, "part");
        RPartition p;
        p.parts.resize(part_lines.size());
        for (IndexedLine& l : part_lines) {
            std::sort(l.members.begin(), l.members.end());
            p.parts[l.index] = std::move(l.members);
        }
        result.partition = std::move(p);
    }
    if (!row_lines.empty()) {
        check_contiguous(row_lines, "row");
        std::size_t width = row_lines.front().members.size();
        for (const IndexedLine& l : row_lines) {
            if (l.members.size() != width) {
                throw ParseError(l.line_no, "row " + std::to_string(l.index) + " has " +
                                                std::to_string(l.members.size()) +
                                                " members, expected " + std::to_string(width));
            }
        }
        CliqueGrid grid;
        grid.rows = static_cast<int>(row_lines.size());
        grid.cols = static_cast<int>(width);
        grid.cells.resize(grid.rows * static_cast<std::size_t>(grid.cols));
        for (const IndexedLine& l : row_lines) {
            std::copy(l.members.begin(), l.members.end(),
                      grid.cells.begin() + static_cast<std::size_t>(l.index) * grid.cols);
        }
        result.grid = std::move(grid);
    }
    return result;
}

ParsedInput parse_graph_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream content;
    content << file.rdbuf();
    return parse_graph_text(content.str());
}

std::string to_graph_text(const Graph& g, const RPartition* partition, const CliqueGrid* grid,
                          std::span<const std::string> comments) {
    std::ostringstream out;
    for (const std::string& comment : comments) {
        out << "# " << comment << '\n';
    }
    out << "graph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << '\n';
    }
    if (partition) {
        for (int i = 0; i < partition->r(); ++i) {
            out << "part " << i << ':';
            for (Vertex v : partition->parts[i]) out << ' ' << v;
            out << '\n';
        }
    }
    if (grid) {
        for (int j = 0; j < grid->rows; ++j) {
            out << "row " << j << ':';
            for (int i = 0; i < grid->cols; ++i) out << ' ' << grid->cell(j, i);
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace unmixed
