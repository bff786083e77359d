#include <gtest/gtest.h>

#include <map>
#include <random>

#include "coxindex/rank.hpp"
#include "helpers.hpp"

using namespace coxindex;
using testing_support::labels;

namespace {

// Top-down memoized evaluation of the recursive definition.
class RecursiveRank {
public:
    explicit RecursiveRank(const SimplicialGraph& g) : g_(g) {}

    bool operator()(int s, int t, int n) {
        if (s > t) std::swap(s, t);
        auto key = std::make_tuple(s, t, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool value;
        if (n == 1) {
            value = true;
            for (int a = 0; a < g_.size() && value; ++a) {
                for (int b = a + 1; b < g_.size() && value; ++b) {
                    if (a == s || a == t || b == s || b == t || g_.adjacent(a, b)) continue;
                    if (g_.adjacent(a, s) && g_.adjacent(a, t) && g_.adjacent(b, s) && g_.adjacent(b, t)) value = false;
                }
            }
        } else {
            value = all_in_link(s, n - 1) || all_in_link(t, n - 1);
        }
        memo_[key] = value;
        return value;
    }

private:
    bool all_in_link(int w, int n) {
        auto l = g_.neighbors(w).indices();
        for (std::size_t i = 0; i < l.size(); ++i) {
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                if (!g_.adjacent(l[i], l[j]) && !(*this)(l[i], l[j], n)) return false;
            }
        }
        return true;
    }

    const SimplicialGraph& g_;
    std::map<std::tuple<int, int, int>, bool> memo_;
};

}  // namespace

TEST(Rank, IsolatedPairIsAlwaysRank) {
    SimplicialGraph g = SimplicialGraph::from_edges(2, {});
    RankTable t(g, 5);
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(t.rank(0, 1, n));
}

TEST(Rank, SquareDiagonal) {
    SimplicialGraph g = builtin_graph("c4");
    RankTable t(g, 3);
    int a = g.index_of("a"), c = g.index_of("c");
    EXPECT_FALSE(t.rank(a, c, 1));
    EXPECT_FALSE(t.rank(a, c, 2));
    EXPECT_EQ(t.column(a, c), (std::vector<bool>{false, false, false}));
}

TEST(Rank, PentagonPairsAreRankOne) {
    SimplicialGraph g = cycle_graph(5);
    RankTable t(g, 1);
    for (auto [s, u] : t.pairs()) EXPECT_TRUE(t.rank(s, u, 1));
}

TEST(Rank, Errors) {
    SimplicialGraph g = builtin_graph("c4");
    RankTable t(g, 2);
    EXPECT_THROW(t.rank(0, 1, 1), InputError);
    EXPECT_THROW(t.rank(0, 2, 3), InputError);
    EXPECT_THROW(t.rank(0, 2, 0), InputError);
    EXPECT_THROW(RankTable(g, 0), InputError);
}

TEST(Rank, MatchesRecursiveDefinition) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        std::bernoulli_distribution coin(0.3 + 0.1 * (trial % 4));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        SimplicialGraph g = SimplicialGraph::from_edges(n, edges);
        RankTable table(g, 4);
        RecursiveRank ref(g);
        for (auto [s, t] : table.pairs()) {
            for (int k = 1; k <= 4; ++k) EXPECT_EQ(table.rank(s, t, k), ref(s, t, k));
        }
    }
}

TEST(Bounds, Arithmetic) {
    auto r = bounds_for_index(3);
    EXPECT_EQ(r.thick_upper, 3);
    EXPECT_EQ(r.divergence_degree_upper, 4);
    EXPECT_EQ(r.alg_thick_upper, 5);
    EXPECT_FALSE(r.exact_low_order);
    EXPECT_EQ(bounds_for_index(0).alg_thick_upper, 0);
    EXPECT_TRUE(bounds_for_index(1).exact_low_order);
    EXPECT_THROW(bounds_for_index(-1), InputError);
}

TEST(Bounds, NamedGraphs) {
    auto sq = bounds(builtin_graph("c4"));
    ASSERT_TRUE(sq.bounds.has_value());
    EXPECT_EQ(sq.bounds->thick_upper, 0);
    EXPECT_EQ(sq.bounds->divergence_degree_upper, 1);
    EXPECT_TRUE(sq.bounds->exact_low_order);
    auto th = bounds(theta8());
    ASSERT_TRUE(th.bounds.has_value());
    EXPECT_EQ(th.bounds->thick_upper, 1);
    EXPECT_EQ(th.bounds->divergence_degree_upper, 2);
    EXPECT_TRUE(th.bounds->exact_low_order);
    EXPECT_FALSE(bounds(cycle_graph(5)).bounds.has_value());
}

TEST(CheckThm72, Theta8FailsOnLinks) {
    SimplicialGraph g = theta8();
    auto c = check_thm72(g, g.index_of("x"), g.index_of("y"));
    EXPECT_FALSE(c.passed());
    EXPECT_FALSE(c.checks[2].passed);
    EXPECT_FALSE(c.conclusion.has_value());
}

TEST(CheckThm72, SquareFailsOnIndex) {
    SimplicialGraph g = builtin_graph("c4");
    auto c = check_thm72(g, g.index_of("a"), g.index_of("c"));
    EXPECT_EQ(c.first_failure(), 2);
    EXPECT_FALSE(c.b_index.has_value());
}

TEST(CheckThm72, InputErrors) {
    SimplicialGraph g = builtin_graph("c4");
    EXPECT_THROW(check_thm72(g, 0, 0), InputError);
    EXPECT_THROW(check_thm72(g, 0, 9), InputError);
}

TEST(GammaN, TwoPassesWithDefaultRule) {
    auto r = generate_gamma_n(2, theta8());
    EXPECT_EQ(r.graph.size(), 10);
    EXPECT_TRUE(r.certificate.passed());
    EXPECT_EQ(r.certificate.n, 2);
    EXPECT_EQ(hypergraph_index(r.graph).index, 2);
    auto again = check_thm72(r.graph, r.u, r.v);
    EXPECT_TRUE(again.passed());
    ASSERT_TRUE(again.conclusion && again.conclusion->exact);
    EXPECT_EQ(again.conclusion->exact->thick_order, 2);
    EXPECT_EQ(again.conclusion->exact->divergence_degree, 3);
    EXPECT_EQ(again.conclusion->exact->alg_thick_upper, 3);
    auto b = bounds(r.graph);
    ASSERT_TRUE(b.bounds && b.bounds->exact);
    EXPECT_EQ(b.bounds->exact->n, 2);
}

TEST(GammaN, ExplicitLinksThatWork) {
    AttachmentRule rule{{{"a", "c", "a", "d1"}}};
    auto r = generate_gamma_n(2, theta8(), rule);
    EXPECT_EQ(r.graph.neighbors(r.u), labels(r.graph, {"a", "c"}));
    EXPECT_EQ(r.graph.neighbors(r.v), labels(r.graph, {"a", "d1"}));
}

TEST(GammaN, BottomLinksViolateRankHypothesis) {
    AttachmentRule rule{{{"b1", "b2", "d1", "d2"}}};
    try {
        generate_gamma_n(2, theta8(), rule);
        FAIL() << "expected a generation error";
    } catch (const GenerationError& e) {
        EXPECT_EQ(e.step(), 2);
        EXPECT_EQ(e.hypothesis(), 4);
    }
}

TEST(GammaN, AdjacentLinkViolatesLinkHypothesis) {
    AttachmentRule rule{{{"x", "b1", "a", "c"}}};
    try {
        generate_gamma_n(2, theta8(), rule);
        FAIL() << "expected a generation error";
    } catch (const GenerationError& e) {
        EXPECT_EQ(e.hypothesis(), 3);
    }
}

TEST(GammaN, FourHasFourteenVertices) {
    auto r = generate_gamma_n(4, theta8());
    EXPECT_EQ(r.graph.size(), 14);
    EXPECT_EQ(hypergraph_index(r.graph).index, 4);
    EXPECT_EQ(r.links.size(), 3U);
    EXPECT_EQ(r.graph.label(r.u), "u4");
    EXPECT_EQ(r.graph.label(r.v), "v4");
}

TEST(GammaN, InvalidArguments) {
    EXPECT_THROW(generate_gamma_n(1, theta8()), InputError);
    EXPECT_THROW(generate_gamma_n(2, builtin_graph("c4")), GenerationError);
    AttachmentRule unknown{{{"zz", "a", "c", "d1"}}};
    EXPECT_THROW(generate_gamma_n(2, theta8(), unknown), InputError);
}
