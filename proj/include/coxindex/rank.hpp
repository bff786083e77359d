#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxindex/graph.hpp"
#include "coxindex/lambda.hpp"

namespace coxindex {

/// rank_n predicates for every non-commuting pair and every n in 1..max_level.
///
/// rank_1(s,t) holds when s and t lie in no common induced square. For n >= 2,
/// rank_n(s,t) holds when every non-commuting pair inside link(s) is rank_{n-1},
/// or every such pair inside link(t) is. A link without non-commuting pairs makes
/// the quantifier vacuously true. The predicate is kept per level because it is
/// not monotone in n.
class RankTable {
public:
    RankTable(const SimplicialGraph& g, int max_level);

    int max_level() const { return max_level_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// Throws InputError for adjacent or equal vertices, or n outside 1..max_level.
    bool rank(int s, int t, int n) const;
    /// rank_1..rank_max for one pair.
    std::vector<bool> column(int s, int t) const;

private:
    int pair_id(int s, int t) const;

    int n_vertices_;
    int max_level_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> id_;                 // n*n lookup, -1 for adjacent/equal
    std::vector<std::vector<bool>> table_;  // [level-1][pair]
};

RankTable rank_table(const SimplicialGraph& g, int max_level);

/// Bounds implied by a finite hypergraph index h.
struct BoundsReport {
    int index = 0;
    int thick_upper = 0;
    int divergence_degree_upper = 1;
    int alg_thick_upper = 0;
    /// h in {0, 1}: thickness, algebraic thickness and divergence degree are exact.
    bool exact_low_order = false;

    /// Present when the graph carries a passing counterexample certificate with parameter n.
    struct ExactClaims {
        int n = 0;
        int thick_order = 0;
        int divergence_degree = 0;
        int alg_thick_lower_exclusive = 0;
        int alg_thick_upper = 0;
        int u = -1;
        int v = -1;
    };
    std::optional<ExactClaims> exact;
};

/// Pure arithmetic on h.
BoundsReport bounds_for_index(int h);

struct BoundsResult {
    IndexReport index;
    /// Empty when the index is infinite (relatively hyperbolic group).
    std::optional<BoundsReport> bounds;
};

/// Computes the index, derives bounds and, for graphs with a vertex pair meeting the
/// counterexample hypotheses, attaches the exact claims.
BoundsResult bounds(const SimplicialGraph& g);

struct HypothesisCheck {
    bool passed = false;
    std::string detail;
};

/// Evaluation of the four counterexample hypotheses for B = V minus {u, v}.
struct Thm72Certificate {
    VertexSet b_vertices;
    int u = -1;
    int v = -1;
    std::optional<int> b_index;
    /// n = b_index + 1, when b_index is finite and at least 1.
    std::optional<int> n;
    std::array<HypothesisCheck, 4> checks;
    std::optional<BoundsReport> conclusion;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    /// 1-based number of the first failing hypothesis, 0 when all pass.
    int first_failure() const;
};

/// Throws InputError if u or v is out of range or u == v.
Thm72Certificate check_thm72(const SimplicialGraph& g, int u, int v);

class GenerationError : public std::runtime_error {
public:
    GenerationError(int step, int hypothesis, const std::string& what)
        : std::runtime_error(what), step_(step), hypothesis_(hypothesis) {}
    int step() const { return step_; }
    /// Violated hypothesis (1..4), or 0 when the index check failed.
    int hypothesis() const { return hypothesis_; }

private:
    int step_;
    int hypothesis_;
};

/// Link choice for one step: the neighbours of u_k and of v_k.
struct StepLinks {
    std::pair<int, int> u_link;
    std::pair<int, int> v_link;
};

struct GammaN {
    SimplicialGraph graph;
    int u = -1;
    int v = -1;
    /// Certificate for the final step.
    Thm72Certificate certificate;
    /// Links used at each step k = 2..n, as vertex indices of the final graph.
    std::vector<StepLinks> links;
};

/// Link choice for one step by vertex label: u_k joins {u_first, u_second}, v_k joins {v_first, v_second}.
struct LinkLabels {
    std::string u_first, u_second, v_first, v_second;
};

/// Attachment rule: explicit links for the first steps, then automatic search in
/// canonical pair order. Labels are resolved against B_{k-1}.
struct AttachmentRule {
    std::vector<LinkLabels> explicit_steps;
};

/// Builds B_2, ..., B_n from a seed of index 1 by adjoining u_k, v_k with two-vertex
/// links, verifying every hypothesis and index(B_k) = k at each step.
/// Throws GenerationError naming the violated hypothesis.
GammaN generate_gamma_n(int n, const SimplicialGraph& seed, const AttachmentRule& rule = {});

}  // namespace coxindex
