#include "coxindex/spectrum.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "coxindex/parallel.hpp"

namespace coxindex {

namespace {

std::optional<int> subset_index(const SimplicialGraph& g, VertexSet t) {
    return hypergraph_index(induced_subgraph(g, t)).index;
}

// Lifts a vertex set of induced_subgraph(g, t) back to indices of g.
VertexSet lift(VertexSet local, VertexSet t) {
    std::vector<int> idx = t.indices();
    VertexSet out;
    local.for_each([&](int i) { out.insert(idx[i]); });
    return out;
}

bool has_finite_subset(const SimplicialGraph& g, VertexSet within) {
    // Any finite-index graph has a wide subgraph, hence at least four vertices.
    if (within.size() < 4) return false;
    std::vector<int> idx = within.indices();
    const std::uint64_t total = std::uint64_t{1} << idx.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        VertexSet t = lift(VertexSet(mask), within);
        if (t.size() >= 4 && subset_index(g, t)) return true;
    }
    return false;
}

}  // namespace

SpectrumReport spectrum(const SimplicialGraph& g, int cap) {
    if (g.size() > cap) {
        throw ResourceLimitError("spectrum needs at most " + std::to_string(cap) + " vertices, graph has " +
                                 std::to_string(g.size()));
    }
    SpectrumReport report;
    report.whole_graph_index = hypergraph_index(g);
    report.triangle_free = is_triangle_free(g);

    if (report.whole_graph_index.finite()) {
        report.maximal_subsets.push_back({g.vertices(), *report.whole_graph_index.index});
        report.spectrum.push_back(*report.whole_graph_index.index);
        return report;
    }

    const int n = g.size();
    std::vector<std::vector<VertexSet>> by_size(n + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet t(mask);
        by_size[t.size()].push_back(t);
    }

    // Finite index is not monotone in either direction, so sweep sizes downward and
    // accept every finite subset not already inside an accepted one.
    std::vector<SpectrumEntry> accepted;
    for (int size = n - 1; size >= 4; --size) {
        std::vector<VertexSet> candidates;
        for (VertexSet t : by_size[size]) {
            bool covered = std::any_of(accepted.begin(), accepted.end(),
                                       [&](const SpectrumEntry& e) { return t.subset_of(e.vertices); });
            if (!covered) candidates.push_back(t);
        }
        std::vector<std::optional<int>> results(candidates.size());
        parallel_for(candidates.size(), [&](std::size_t i) { results[i] = subset_index(g, candidates[i]); });
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (results[i]) accepted.push_back({candidates[i], *results[i]});
        }
    }

    std::sort(accepted.begin(), accepted.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return canonical_less(a.vertices, b.vertices); });
    report.maximal_subsets = accepted;
    std::set<int> distinct;
    for (const auto& e : accepted) distinct.insert(e.index);
    report.spectrum.assign(distinct.begin(), distinct.end());

    for (std::size_t i = 0; i < accepted.size(); ++i) {
        for (std::size_t j = i + 1; j < accepted.size(); ++j) {
            if (has_finite_subset(g, accepted[i].vertices & accepted[j].vertices)) {
                report.ambiguous_containers.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return report;
}

}  // namespace coxindex
