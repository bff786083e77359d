#pragma once

#include <vector>

#include "coxindex/graph.hpp"

namespace coxindex {

enum class JoinKind { Wide, Strip };

/// A subgraph with a certified join partition: A * B for wide subgraphs,
/// {s,t} * K for strips (side_a holds the non-adjacent pair, side_b the clique).
struct JoinWitness {
    VertexSet vertices;
    VertexSet side_a;
    VertexSet side_b;
    JoinKind kind = JoinKind::Wide;

    bool operator==(const JoinWitness&) const = default;
};

/// A wide subgraph split as A' * B' * K, K being every vertex adjacent to all others.
struct WideDecomposition {
    VertexSet a_prime;
    VertexSet b_prime;
    VertexSet k;
};

/// Maximal wide subgraphs, one witness per vertex set, in canonical vertex-set order.
std::vector<JoinWitness> enumerate_wide(const SimplicialGraph& g);

/// Strip subgraphs given the wide subgraphs of the same graph, in canonical order.
std::vector<JoinWitness> enumerate_strip(const SimplicialGraph& g, const std::vector<JoinWitness>& wide);

/// Throws ContractError if w is not a wide join of g.
WideDecomposition wide_decomposition(const SimplicialGraph& g, const JoinWitness& w);

/// Re-checks a witness against its definition (join property and side shapes).
bool verify_witness(const SimplicialGraph& g, const JoinWitness& w);

/// Maximal cliques of the subgraph induced by `within`, canonical order.
std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g, VertexSet within);

}  // namespace coxindex
