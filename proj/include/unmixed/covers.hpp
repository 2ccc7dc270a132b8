#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "unmixed/graph.hpp"

namespace unmixed {

// All maximal independent sets, in lexicographic order. Throws BudgetError
// past max_sets.
std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t max_sets = kDefaultSetCap);

// All minimal vertex covers, in lexicographic order. A set is a minimal
// vertex cover exactly when its complement is a maximal independent set.
std::vector<VertexSet> enumerate_minimal_covers(const Graph& g,
                                                std::size_t max_sets = kDefaultSetCap);

struct CoverCensus {
    // Same length; minimal_vertex_covers[k] is the complement of
    // maximal_independent_sets[k].
    std::vector<VertexSet> maximal_independent_sets;
    std::vector<VertexSet> minimal_vertex_covers;
    std::map<int, int> size_histogram;
    // All minimal covers share one cardinality (equivalently, all maximal
    // independent sets do).
    bool is_unmixed = false;
    int covering_number = 0;      // size of a smallest vertex cover
    int independence_number = 0;  // size of a largest independent set
};

// Decides well-coveredness by full enumeration.
CoverCensus is_unmixed_bruteforce(const Graph& g, std::size_t max_sets = kDefaultSetCap);

}  // namespace unmixed
