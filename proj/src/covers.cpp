#include "unmixed/covers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace unmixed {

namespace {

// s must already be independent; maximality means every outside vertex has
// a neighbor inside s.
bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    std::vector<char> inside(g.vertex_count(), 0);
    for (Vertex v : s) inside[v] = 1;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (inside[u]) continue;
        bool blocked = false;
        for (Vertex nbr : g.neighbors(u)) {
            if (inside[nbr]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return false;
    }
    return true;
}

// Branch and bound over (chosen, candidates) pairs: candidates holds the
// vertices not adjacent to anything chosen. Branching on a pivot vertex
// splits the family into sets containing it and sets avoiding it, so no
// set is produced twice. When the candidates induce no edge they all join
// the set; a final maximality check filters sets a discarded pivot could
// still extend.
struct MisEnum {
    const Graph& g;
    std::size_t cap;
    std::vector<VertexSet> out;

    void recurse(const VertexSet& chosen, const VertexSet& candidates) {
        Vertex pivot = -1;
        int best = 0;
        for (Vertex u : candidates) {
            int deg = 0;
            for (Vertex w : candidates) {
                if (w != u && g.has_edge(u, w)) ++deg;
            }
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        }
        if (pivot < 0) {
            VertexSet s = chosen;
            s.insert(s.end(), candidates.begin(), candidates.end());
            s = normalize_vertex_set(std::move(s));
            if (is_maximal_independent(g, s)) {
                if (out.size() >= cap) {
                    throw BudgetError("more than " + std::to_string(cap) +
                                      " maximal independent sets");
                }
                out.push_back(std::move(s));
            }
            return;
        }

        VertexSet with = chosen;
        with.push_back(pivot);
        VertexSet reduced;
        for (Vertex u : candidates) {
            if (u != pivot && !g.has_edge(u, pivot)) reduced.push_back(u);
        }
        recurse(with, reduced);

        VertexSet without;
        for (Vertex u : candidates) {
            if (u != pivot) without.push_back(u);
        }
        recurse(chosen, without);
    }
};

}  // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t max_sets) {
    MisEnum walker{g, max_sets, {}};
    VertexSet all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    walker.recurse({}, all);
    std::sort(walker.out.begin(), walker.out.end());
    return walker.out;
}

std::vector<VertexSet> enumerate_minimal_covers(const Graph& g, std::size_t max_sets) {
    std::vector<VertexSet> covers;
    for (const VertexSet& mis : enumerate_mis(g, max_sets)) {
        covers.push_back(set_complement(g, mis));
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

CoverCensus is_unmixed_bruteforce(const Graph& g, std::size_t max_sets) {
    CoverCensus census;
    census.maximal_independent_sets = enumerate_mis(g, max_sets);
    census.minimal_vertex_covers.reserve(census.maximal_independent_sets.size());
    for (const VertexSet& mis : census.maximal_independent_sets) {
        census.minimal_vertex_covers.push_back(set_complement(g, mis));
    }
    census.covering_number = g.vertex_count();
    for (const VertexSet& cover : census.minimal_vertex_covers) {
        int size = static_cast<int>(cover.size());
        ++census.size_histogram[size];
        census.covering_number = std::min(census.covering_number, size);
        census.independence_number =
            std::max(census.independence_number, g.vertex_count() - size);
    }
    census.is_unmixed = census.size_histogram.size() <= 1;
    return census;
}

}  // namespace unmixed
