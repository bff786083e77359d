#include <gtest/gtest.h>

#include "coxindex/oracle.hpp"
#include "helpers.hpp"

using namespace coxindex;

TEST(Oracle, OmegaPsiExamples) {
    SimplicialGraph c4 = builtin_graph("c4");
    auto sq = oracle::brute_omega_psi(c4);
    EXPECT_EQ(sq.wide, std::vector<VertexSet>{c4.vertices()});
    EXPECT_TRUE(sq.strips.empty());

    auto hex = oracle::brute_omega_psi(cycle_graph(6));
    EXPECT_TRUE(hex.wide.empty());
    EXPECT_EQ(hex.strips.size(), 6U);

    auto k5 = oracle::brute_omega_psi(complete_graph(5));
    EXPECT_TRUE(k5.wide.empty());
    EXPECT_TRUE(k5.strips.empty());
}

TEST(Oracle, IndexExamples) {
    EXPECT_EQ(oracle::brute_index(builtin_graph("c4")).index, 0);
    EXPECT_EQ(oracle::brute_index(theta8()).index, 1);
    auto c5 = oracle::brute_index(cycle_graph(5));
    EXPECT_FALSE(c5.finite());
    EXPECT_EQ(c5.reason_infinite, InfiniteReason::OmegaEmpty);
}

TEST(Oracle, LambdaFamiliesTheta8) {
    auto f = oracle::brute_lambda(theta8());
    ASSERT_EQ(f.levels.size(), 2U);
    EXPECT_EQ(f.levels[0].size(), 3U);
    EXPECT_EQ(f.levels[1].size(), 1U);
    EXPECT_TRUE(f.covered);
    EXPECT_EQ(f.steps, 1);
}

TEST(Oracle, Census) {
    EXPECT_EQ(oracle::census_size(1), 1U);
    EXPECT_EQ(oracle::census_size(3), 8U);
    EXPECT_EQ(oracle::census_size(4), 64U);
    int count = 0;
    oracle::enumerate_all_graphs(3, [&](const SimplicialGraph& g) {
        EXPECT_EQ(g.size(), 3);
        ++count;
    });
    EXPECT_EQ(count, 8);
    EXPECT_THROW(oracle::enumerate_all_graphs(8, [](const SimplicialGraph&) {}), ResourceLimitError);
}

TEST(Oracle, CapsAreEnforced) {
    EXPECT_THROW(oracle::brute_omega_psi(cycle_graph(17)), ResourceLimitError);
    EXPECT_THROW(oracle::brute_spectrum(cycle_graph(13)), ResourceLimitError);
}

TEST(Oracle, DiffOnNamedGraphs) {
    for (const char* name : {"c4", "c5", "c6", "theta8", "path3", "c4_pendant"}) {
        auto d = oracle::diff(builtin_graph(name), true);
        EXPECT_TRUE(d.ok()) << name;
        EXPECT_TRUE(d.spectrum_checked) << name;
    }
    EXPECT_TRUE(oracle::diff(testing_support::membership_subtlety(), true).ok());
}
