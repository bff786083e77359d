#pragma once

#include <optional>
#include <vector>

#include "coxindex/enumeration.hpp"
#include "coxindex/graph.hpp"

namespace coxindex {

enum class HyperedgeOrigin { WideSeed, StripSeed, Merge };

struct Hyperedge {
    VertexSet vertices;
    int level = 0;
    HyperedgeOrigin origin = HyperedgeOrigin::Merge;
    /// Ids (positions in the previous level) of the hyperedges merged into this one.
    std::vector<int> members;
};

struct HyperedgeRef {
    int level = 0;
    int id = 0;
    bool operator==(const HyperedgeRef&) const = default;
};

/// Lambda hypergraphs from level 0 upward. Construction stops at the first level
/// holding a hyperedge equal to V, or when a level would repeat the previous one.
struct LambdaSequence {
    std::vector<JoinWitness> omega;
    std::vector<JoinWitness> psi;
    std::vector<std::vector<Hyperedge>> levels;
    /// parent[i][j]: id in levels[i+1] of the hyperedge that levels[i][j] is a member of.
    std::vector<std::vector<int>> parent;
    std::optional<int> stabilized_at;
    std::optional<HyperedgeRef> covering;
    /// Number of level-building steps performed, including the one that detected a fixed point.
    int levels_computed = 0;

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    const Hyperedge& at(HyperedgeRef r) const { return levels.at(r.level).at(r.id); }

    /// The hyperedge at `to_level` that levels[from.level][from.id] is a member of.
    HyperedgeRef member_of(HyperedgeRef from, int to_level) const;
};

enum class InfiniteReason { OmegaEmpty, Stabilized };

struct IndexReport {
    std::optional<int> index;
    std::optional<VertexSet> witness;
    std::optional<InfiniteReason> reason_infinite;
    int levels_computed = 0;

    bool finite() const { return index.has_value(); }
};

struct NextLevel {
    std::vector<Hyperedge> hyperedges;
    std::vector<int> membership;
};

/// Chain e1 = H0, ..., Hk = e2 in `edges` whose consecutive intersections contain a
/// non-adjacent pair of g; empty when none exists. Throws InputError if the two
/// endpoints sit on different levels.
std::vector<int> equivalent_chain(const SimplicialGraph& g, const std::vector<Hyperedge>& edges, int e1, int e2);

/// Merges each class of chain-equivalent hyperedges into its union. Classes with the
/// same union collapse to one hyperedge. Output is in canonical vertex-set order.
NextLevel next_level(const SimplicialGraph& g, const std::vector<Hyperedge>& level);

LambdaSequence lambda_sequence(const SimplicialGraph& g);
IndexReport index_from_sequence(const SimplicialGraph& g, const LambdaSequence& seq);
IndexReport hypergraph_index(const SimplicialGraph& g);

/// Hyperedges of a level whose vertex sets are not strip subgraphs of g.
std::vector<Hyperedge> non_strip_hyperedges(const SimplicialGraph& g, const LambdaSequence& seq, int level);

}  // namespace coxindex
