#pragma once

#include <utility>
#include <vector>

#include "coxindex/graph.hpp"
#include "coxindex/lambda.hpp"

namespace coxindex {

inline constexpr int kDefaultSpectrumCap = 16;

struct SpectrumEntry {
    VertexSet vertices;
    int index = 0;
    bool operator==(const SpectrumEntry&) const = default;
};

struct SpectrumReport {
    /// Inclusion-maximal vertex subsets inducing finite hypergraph index, canonical order.
    std::vector<SpectrumEntry> maximal_subsets;
    /// Distinct indices of those subsets, ascending.
    std::vector<int> spectrum;
    IndexReport whole_graph_index;
    bool triangle_free = true;
    /// Pairs of maximal subsets (positions) whose intersection still contains a
    /// finite-index subset, i.e. a finite-index special subgroup with two containers.
    std::vector<std::pair<int, int>> ambiguous_containers;
};

/// Throws ResourceLimitError when the graph has more than `cap` vertices.
SpectrumReport spectrum(const SimplicialGraph& g, int cap = kDefaultSpectrumCap);

}  // namespace coxindex
