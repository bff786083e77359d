#include <gtest/gtest.h>

#include "coxindex/enumeration.hpp"
#include "coxindex/lambda.hpp"
#include "coxindex/oracle.hpp"
#include "helpers.hpp"

using namespace coxindex;
using testing_support::labels;
using testing_support::sorted;

namespace {

std::vector<Hyperedge> level0(const SimplicialGraph& g) { return lambda_sequence(g).levels.at(0); }

std::vector<VertexSet> sets(const std::vector<Hyperedge>& es) {
    std::vector<VertexSet> out;
    for (const auto& e : es) out.push_back(e.vertices);
    return out;
}

int find(const std::vector<Hyperedge>& es, VertexSet v) {
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].vertices == v) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

TEST(EquivalentChain, Theta8ChainsThroughBottom) {
    SimplicialGraph g = theta8();
    auto l0 = level0(g);
    int top_a = find(l0, labels(g, {"x", "y", "a", "b1", "b2"}));
    int top_c = find(l0, labels(g, {"x", "y", "c", "d1", "d2"}));
    int bottom = find(l0, labels(g, {"x", "y", "b1", "b2", "d1", "d2"}));
    ASSERT_GE(top_a, 0);
    ASSERT_GE(top_c, 0);
    ASSERT_GE(bottom, 0);
    auto chain = equivalent_chain(g, l0, top_a, top_c);
    ASSERT_FALSE(chain.empty());
    EXPECT_EQ(chain.front(), top_a);
    EXPECT_EQ(chain.back(), top_c);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        EXPECT_TRUE(has_non_edge(g, l0[chain[i]].vertices & l0[chain[i + 1]].vertices));
    }
    // a and c share x,y only, so the direct step is also allowed.
    EXPECT_LE(chain.size(), 3U);
}

TEST(EquivalentChain, HexagonStripsAreIsolated) {
    SimplicialGraph g = cycle_graph(6);
    auto l0 = level0(g);
    ASSERT_EQ(l0.size(), 6U);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            auto chain = equivalent_chain(g, l0, i, j);
            if (i == j) {
                EXPECT_EQ(chain, std::vector<int>{i});
            } else {
                EXPECT_TRUE(chain.empty());
            }
        }
    }
}

TEST(EquivalentChain, MixedLevelsRejected) {
    SimplicialGraph g = theta8();
    auto l0 = level0(g);
    l0[1].level = 1;
    EXPECT_THROW(equivalent_chain(g, l0, 0, 1), InputError);
}

TEST(NextLevel, Theta8Merges) {
    SimplicialGraph g = theta8();
    auto next = next_level(g, level0(g));
    ASSERT_EQ(next.hyperedges.size(), 1U);
    EXPECT_EQ(next.hyperedges[0].vertices, g.vertices());
    EXPECT_EQ(next.membership, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(next.hyperedges[0].members.size(), 3U);
}

TEST(NextLevel, HexagonUnchanged) {
    SimplicialGraph g = cycle_graph(6);
    auto l0 = level0(g);
    auto next = next_level(g, l0);
    EXPECT_EQ(sorted(sets(next.hyperedges)), sorted(sets(l0)));
}

TEST(NextLevel, SingleHyperedge) {
    SimplicialGraph g = builtin_graph("c4");
    auto next = next_level(g, level0(g));
    ASSERT_EQ(next.hyperedges.size(), 1U);
    EXPECT_EQ(next.hyperedges[0].vertices, g.vertices());
    EXPECT_EQ(next.hyperedges[0].level, 1);
}

TEST(LambdaSequence, SquareCoversAtZero) {
    SimplicialGraph g = builtin_graph("c4");
    auto s = lambda_sequence(g);
    ASSERT_EQ(s.levels.size(), 1U);
    ASSERT_TRUE(s.covering.has_value());
    EXPECT_EQ(s.covering->level, 0);
    EXPECT_EQ(s.levels_computed, 0);
    EXPECT_EQ(s.levels[0][0].origin, HyperedgeOrigin::WideSeed);
}

TEST(LambdaSequence, HexagonStabilizes) {
    auto s = lambda_sequence(cycle_graph(6));
    EXPECT_FALSE(s.covering.has_value());
    ASSERT_TRUE(s.stabilized_at.has_value());
    EXPECT_EQ(*s.stabilized_at, 0);
    EXPECT_EQ(s.levels.size(), 1U);
    EXPECT_EQ(s.levels[0].size(), 6U);
    for (const auto& e : s.levels[0]) EXPECT_EQ(e.origin, HyperedgeOrigin::StripSeed);
}

TEST(LambdaSequence, Theta8CoversAtOne) {
    SimplicialGraph g = theta8();
    auto s = lambda_sequence(g);
    ASSERT_TRUE(s.covering.has_value());
    EXPECT_EQ(s.covering->level, 1);
    EXPECT_EQ(s.at(*s.covering).vertices, g.vertices());
    for (int j = 0; j < 3; ++j) EXPECT_EQ(s.member_of({0, j}, 1), s.covering);
}

TEST(LambdaSequence, MembershipIsNotContainment) {
    SimplicialGraph g = testing_support::membership_subtlety();
    auto s = lambda_sequence(g);
    ASSERT_GE(s.levels.size(), 2U);
    int strip = find(s.levels[0], VertexSet::of({0, 2, 5}));
    ASSERT_GE(strip, 0);
    int parent = s.parent[0][strip];
    EXPECT_EQ(s.levels[1][parent].vertices, VertexSet::of({0, 2, 5}));
    int container = find(s.levels[1], g.vertices());
    ASSERT_GE(container, 0);
    EXPECT_NE(parent, container);
    EXPECT_TRUE(s.levels[0][strip].vertices.subset_of(s.levels[1][container].vertices));
}

TEST(HypergraphIndex, NamedExamples) {
    EXPECT_EQ(hypergraph_index(builtin_graph("c4")).index, 0);
    EXPECT_EQ(hypergraph_index(theta8()).index, 1);
    for (int n = 1; n <= 5; ++n) {
        auto r = hypergraph_index(complete_graph(n));
        EXPECT_FALSE(r.finite());
        EXPECT_EQ(r.reason_infinite, InfiniteReason::OmegaEmpty);
    }
    for (int n : {5, 6}) {
        auto r = hypergraph_index(cycle_graph(n));
        EXPECT_FALSE(r.finite());
        EXPECT_EQ(r.reason_infinite, InfiniteReason::OmegaEmpty);
    }
    auto pend = hypergraph_index(builtin_graph("c4_pendant"));
    EXPECT_FALSE(pend.finite());
    EXPECT_EQ(pend.reason_infinite, InfiniteReason::Stabilized);
}

TEST(HypergraphIndex, EmptyGraph) {
    SimplicialGraph g;
    auto r = hypergraph_index(g);
    EXPECT_FALSE(r.finite());
    EXPECT_EQ(r.reason_infinite, InfiniteReason::OmegaEmpty);
}

TEST(HypergraphIndex, WitnessCoversAndNothingLowerDoes) {
    SimplicialGraph g = theta8();
    auto s = lambda_sequence(g);
    auto r = index_from_sequence(g, s);
    ASSERT_TRUE(r.finite());
    EXPECT_EQ(r.witness, g.vertices());
    for (int lv = 0; lv < *r.index; ++lv) {
        for (const auto& e : s.levels[lv]) EXPECT_NE(e.vertices, g.vertices());
    }
}

TEST(NonStrip, Examples) {
    SimplicialGraph t = theta8();
    auto st = lambda_sequence(t);
    EXPECT_EQ(non_strip_hyperedges(t, st, 0).size(), 3U);
    SimplicialGraph c6 = cycle_graph(6);
    EXPECT_TRUE(non_strip_hyperedges(c6, lambda_sequence(c6), 0).empty());
    SimplicialGraph c4 = builtin_graph("c4");
    auto n4 = non_strip_hyperedges(c4, lambda_sequence(c4), 0);
    ASSERT_EQ(n4.size(), 1U);
    EXPECT_EQ(n4[0].vertices, c4.vertices());
    EXPECT_THROW(non_strip_hyperedges(t, st, 5), InputError);
}

// Unique membership, the unique-hyperedge lemma and monotone growth over every 5-vertex graph.
TEST(LambdaProperties, AllFiveVertexGraphs) {
    oracle::enumerate_all_graphs(5, [](const SimplicialGraph& g) {
        auto s = lambda_sequence(g);
        for (std::size_t i = 0; i + 1 < s.levels.size(); ++i) {
            ASSERT_EQ(s.parent[i].size(), s.levels[i].size());
            for (std::size_t j = 0; j < s.levels[i].size(); ++j) {
                const auto& p = s.levels[i + 1].at(s.parent[i][j]);
                EXPECT_TRUE(s.levels[i][j].vertices.subset_of(p.vertices));
            }
        }
        if (s.levels.size() >= 2) {
            for (auto [a, b] : non_adjacent_pairs(g)) {
                VertexSet pair = VertexSet::of({a, b});
                std::optional<int> seen;
                for (std::size_t j = 0; j < s.levels[0].size(); ++j) {
                    if (!pair.subset_of(s.levels[0][j].vertices)) continue;
                    if (seen) EXPECT_EQ(*seen, s.parent[0][j]);
                    seen = s.parent[0][j];
                }
            }
        }
        EXPECT_LE(s.levels_computed, g.size());
        EXPECT_TRUE(oracle::diff(g).ok());
    });
}
