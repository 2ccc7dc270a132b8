#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unmixed {

using Vertex = int;

// Sorted, duplicate-free list of vertex indices. Every function in this
// library that returns a set of vertices returns it in this form.
using VertexSet = std::vector<Vertex>;

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Throws std::invalid_argument on a self-loop.
Edge make_edge(Vertex a, Vertex b);

// Thrown when an enumeration would exceed its configured cap.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cap on enumerated families (maximal independent sets, minimal covers,
// r-partitions, perfect matchings) unless the caller overrides it.
inline constexpr std::size_t kDefaultSetCap = 1'000'000;

// Node budget for backtracking searches unless the caller overrides it.
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Immutable finite simple graph on vertices 0..n-1. Edges are deduplicated
// at construction; self-loops and out-of-range endpoints are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::span<const Edge> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted, duplicate-free.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list. Throws std::out_of_range on a bad vertex.
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
    // Flat n*n adjacency matrix, kept only for small graphs so has_edge
    // is O(1); empty above kMatrixLimit vertices.
    std::vector<std::uint8_t> matrix_;

    static constexpr int kMatrixLimit = 4096;
};

// Sorts and deduplicates a member list.
VertexSet normalize_vertex_set(std::vector<Vertex> members);

// True when s is sorted, duplicate-free and within 0..n-1.
bool is_valid_vertex_set(const Graph& g, const VertexSet& s);

// V(G) \ s. Requires a valid vertex set.
VertexSet set_complement(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& c);

// Length of a shortest u-v path; nullopt when u and v are in different
// components. distance(g, v, v) == 0.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // original[i] is the vertex of the source graph that became vertex i.
    VertexSet original;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement_graph(const Graph& g);

}  // namespace unmixed
