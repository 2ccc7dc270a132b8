#include "unmixed/graph.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace unmixed {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count, std::span<const Edge> edge_list) : n_(vertex_count) {
    if (n_ < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    edges_.reserve(edge_list.size());
    for (const Edge& e : edge_list) {
        Edge norm = make_edge(e.u, e.v);
        if (norm.u < 0 || norm.v >= n_) {
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(e.u) +
                                    " " + std::to_string(e.v));
        }
        edges_.push_back(norm);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.resize(n_);
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (VertexSet& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }

    if (n_ <= kMatrixLimit) {
        matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (const Edge& e : edges_) {
            matrix_[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
            matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex out of range: " + std::to_string(v));
    }
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (!matrix_.empty()) {
        return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

VertexSet normalize_vertex_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool is_valid_vertex_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count()) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
}

VertexSet set_complement(const Graph& g, const VertexSet& s) {
    if (!is_valid_vertex_set(g, s)) {
        throw std::invalid_argument("not a valid vertex set");
    }
    VertexSet out;
    out.reserve(g.vertex_count() - s.size());
    std::size_t pos = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (pos < s.size() && s[pos] == v) {
            ++pos;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    if (!is_valid_vertex_set(g, s)) {
        throw std::invalid_argument("not a valid vertex set");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.has_edge(s[i], s[j])) return false;
        }
    }
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    // c covers G iff V \ c is independent.
    return is_independent_set(g, set_complement(g, c));
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    g.neighbors(u);  // bounds check
    g.neighbors(v);
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    dist[u] = 0;
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        for (Vertex nbr : g.neighbors(cur)) {
            if (dist[nbr] >= 0) continue;
            dist[nbr] = dist[cur] + 1;
            if (nbr == v) return dist[nbr];
            queue.push_back(nbr);
        }
    }
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        for (Vertex nbr : g.neighbors(cur)) {
            if (seen[nbr]) continue;
            seen[nbr] = 1;
            ++reached;
            queue.push_back(nbr);
        }
    }
    return reached == g.vertex_count();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_valid_vertex_set(g, s)) {
        throw std::invalid_argument("not a valid vertex set");
    }
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) {
            edges.push_back(Edge{index[e.u], index[e.v]});
        }
    }
    return InducedSubgraph{Graph(static_cast<int>(s.size()), edges), s};
}

Graph complement_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) edges.push_back(Edge{u, v});
        }
    }
    return Graph(g.vertex_count(), edges);
}

}  // namespace unmixed
