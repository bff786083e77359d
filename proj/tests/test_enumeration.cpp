#include <gtest/gtest.h>

#include <random>

#include "coxindex/enumeration.hpp"
#include "coxindex/oracle.hpp"
#include "helpers.hpp"

using namespace coxindex;
using testing_support::labels;
using testing_support::sorted;

namespace {

std::vector<VertexSet> vertex_sets(const std::vector<JoinWitness>& ws) {
    std::vector<VertexSet> out;
    for (const auto& w : ws) out.push_back(w.vertices);
    return out;
}

}  // namespace

TEST(EnumerateWide, Square) {
    SimplicialGraph g = builtin_graph("c4");
    auto ws = enumerate_wide(g);
    ASSERT_EQ(ws.size(), 1U);
    EXPECT_EQ(ws[0].vertices, g.vertices());
    EXPECT_EQ(ws[0].side_a, labels(g, {"a", "c"}));
    EXPECT_EQ(ws[0].side_b, labels(g, {"b", "d"}));
    EXPECT_EQ(ws[0].kind, JoinKind::Wide);
}

TEST(EnumerateWide, PentagonHasNone) { EXPECT_TRUE(enumerate_wide(cycle_graph(5)).empty()); }

TEST(EnumerateWide, Theta8) {
    SimplicialGraph g = theta8();
    auto got = sorted(vertex_sets(enumerate_wide(g)));
    auto want = sorted({labels(g, {"x", "y", "a", "b1", "b2"}), labels(g, {"x", "y", "c", "d1", "d2"}),
                        labels(g, {"x", "y", "b1", "b2", "d1", "d2"})});
    EXPECT_EQ(got, want);
}

TEST(EnumerateWide, CliqueHasNone) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(enumerate_wide(complete_graph(n)).empty());
}

TEST(EnumerateStrip, PathThroughApex) {
    SimplicialGraph g = builtin_graph("path3");
    auto wide = enumerate_wide(g);
    EXPECT_TRUE(wide.empty());
    auto strips = enumerate_strip(g, wide);
    ASSERT_EQ(strips.size(), 1U);
    EXPECT_EQ(strips[0].vertices, g.vertices());
    EXPECT_EQ(strips[0].side_a, labels(g, {"x", "y"}));
    EXPECT_EQ(strips[0].side_b, labels(g, {"a"}));
    EXPECT_EQ(strips[0].kind, JoinKind::Strip);
}

TEST(EnumerateStrip, SquareAbsorbsCandidates) {
    SimplicialGraph g = builtin_graph("c4");
    EXPECT_TRUE(enumerate_strip(g, enumerate_wide(g)).empty());
}

TEST(EnumerateStrip, HexagonHasSixStrips) {
    SimplicialGraph g = cycle_graph(6);
    auto strips = enumerate_strip(g, enumerate_wide(g));
    std::vector<VertexSet> want;
    for (int i = 0; i < 6; ++i) want.push_back(VertexSet::of({i, (i + 1) % 6, (i + 2) % 6}));
    EXPECT_EQ(sorted(vertex_sets(strips)), sorted(want));
    for (const auto& s : strips) EXPECT_EQ(s.side_b.size(), 1);
}

TEST(EnumerateStrip, Theta8HasNone) {
    SimplicialGraph g = theta8();
    EXPECT_TRUE(enumerate_strip(g, enumerate_wide(g)).empty());
}

TEST(WideDecomposition, Square) {
    SimplicialGraph g = builtin_graph("c4");
    auto d = wide_decomposition(g, enumerate_wide(g)[0]);
    EXPECT_EQ(d.a_prime, labels(g, {"a", "c"}));
    EXPECT_EQ(d.b_prime, labels(g, {"b", "d"}));
    EXPECT_TRUE(d.k.empty());
}

TEST(WideDecomposition, ConePoint) {
    SimplicialGraph g = testing_support::triple_join();
    auto ws = enumerate_wide(g);
    ASSERT_EQ(ws.size(), 1U);
    auto d = wide_decomposition(g, ws[0]);
    EXPECT_EQ(d.k, labels(g, {"m"}));
    EXPECT_EQ(sorted({d.a_prime, d.b_prime}), sorted({labels(g, {"p", "q"}), labels(g, {"r", "s"})}));
}

TEST(WideDecomposition, Theta8BottomWide) {
    SimplicialGraph g = theta8();
    VertexSet target = labels(g, {"x", "y", "b1", "b2", "d1", "d2"});
    for (const auto& w : enumerate_wide(g)) {
        if (w.vertices != target) continue;
        auto d = wide_decomposition(g, w);
        EXPECT_EQ(d.a_prime, labels(g, {"x", "y"}));
        EXPECT_EQ(d.b_prime, labels(g, {"b1", "b2", "d1", "d2"}));
        EXPECT_TRUE(d.k.empty());
        return;
    }
    FAIL() << "bottom wide subgraph missing";
}

TEST(WideDecomposition, RejectsNonWide) {
    SimplicialGraph g = builtin_graph("path3");
    JoinWitness fake{g.vertices(), labels(g, {"x", "y"}), labels(g, {"a"}), JoinKind::Wide};
    EXPECT_THROW(wide_decomposition(g, fake), ContractError);
}

TEST(VerifyWitness, DetectsBrokenJoin) {
    SimplicialGraph g = builtin_graph("c4");
    JoinWitness ok = enumerate_wide(g)[0];
    EXPECT_TRUE(verify_witness(g, ok));
    JoinWitness bad{g.vertices(), labels(g, {"a", "b"}), labels(g, {"c", "d"}), JoinKind::Wide};
    EXPECT_FALSE(verify_witness(g, bad));
}

TEST(MaximalCliques, Triangle) {
    SimplicialGraph g = complete_graph(3);
    auto cs = maximal_cliques(g, g.vertices());
    ASSERT_EQ(cs.size(), 1U);
    EXPECT_EQ(cs[0], g.vertices());
    EXPECT_EQ(maximal_cliques(cycle_graph(5), cycle_graph(5).vertices()).size(), 5U);
}

// Witness soundness, maximality and the structural properties over random graphs.
TEST(EnumerationProperties, RandomGraphs) {
    std::mt19937_64 rng(20241015);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        std::bernoulli_distribution coin(0.25 + 0.1 * (trial % 4));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        SimplicialGraph g = SimplicialGraph::from_edges(n, edges);
        auto wide = enumerate_wide(g);
        auto strips = enumerate_strip(g, wide);

        for (const auto& w : wide) {
            EXPECT_TRUE(verify_witness(g, w));
            (g.vertices() - w.vertices).for_each([&](int v) {
                EXPECT_FALSE(wide_join_partition(g, w.vertices | VertexSet::single(v)).has_value());
            });
            for (const auto& o : wide) {
                if (&o != &w) EXPECT_FALSE(w.vertices.subset_of(o.vertices));
            }
        }
        for (const auto& s : strips) {
            EXPECT_TRUE(verify_witness(g, s));
            for (const auto& w : wide) EXPECT_FALSE(s.vertices.subset_of(w.vertices));
            for (const auto& o : strips) {
                if (&o == &s) continue;
                EXPECT_FALSE(s.vertices.subset_of(o.vertices));
                EXPECT_NE(s.side_a, o.side_a);
            }
        }

        auto brute = oracle::brute_omega_psi(g);
        EXPECT_EQ(sorted(vertex_sets(wide)), brute.wide);
        EXPECT_EQ(sorted(vertex_sets(strips)), brute.strips);
    }
}
