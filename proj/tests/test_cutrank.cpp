#include <gtest/gtest.h>

#include <random>

#include "acr/cutrank.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/named.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

}  // namespace

TEST(Dyadic, ArithmeticAndFormatting) {
    EXPECT_EQ(d("25/16").to_string(), "25/16");
    EXPECT_EQ(d("25/2^4"), d("25/16"));
    EXPECT_EQ(d("50/32"), d("25/16"));
    EXPECT_EQ(d("25/16").to_pow2_string(), "25/2^4");
    EXPECT_EQ(d("25/16").to_decimal(), "1.5625");
    EXPECT_EQ(d("0/1").to_string(), "0");
    EXPECT_EQ(d("3").to_decimal(), "3");
    EXPECT_EQ(d("1/1024").to_decimal(), "0.0009765625");
    EXPECT_EQ(d("3/4") + d("1/2"), d("5/4"));
    EXPECT_EQ(d("3/4") - d("1/4"), d("1/2"));
    EXPECT_THROW(d("1/4") - d("3/4"), DomainError);
    EXPECT_LT(d("7/8"), d("1"));
    EXPECT_GT(d("9/8"), d("1"));
    EXPECT_EQ(d("13/4").floor(), 3);
    EXPECT_EQ(d("13/4").frac(), d("1/4"));
    EXPECT_EQ(d("3/4").scaled(2), d("3"));
    EXPECT_EQ(d("3").scaled(-3), d("3/8"));
    EXPECT_THROW(d("1/3"), ParseError);
    EXPECT_THROW(d("a/2"), ParseError);
    EXPECT_THROW(d("-1/2"), ParseError);
}

TEST(CutRank, Examples) {
    const Graph p4 = path_graph(4);
    EXPECT_EQ(cut_rank(p4, {}), 0);
    EXPECT_EQ(cut_rank(p4, {0, 2}), 2);
    EXPECT_EQ(cut_rank(complete_bipartite(3, 3), {0, 1, 2}), 1);
    EXPECT_EQ(cut_rank_bipartite(p4, {0}, {2, 3}), 0);
    EXPECT_EQ(cut_rank_bipartite(p4, {0}, {1}), 1);
    EXPECT_EQ(cut_rank_bipartite(cycle_graph(5), {0, 2}, {1, 3}), 2);
    EXPECT_THROW(cut_rank_bipartite(p4, {0, 1}, {1, 2}), DomainError);
}

TEST(CutRank, MatchesOracleAndIsSymmetric) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n);
        for (int k = 0; k < 20; ++k) {
            const Word s = rng() & low_bits(n);
            const int r = cut_rank(g, VertexSet(s));
            ASSERT_EQ(r, oracle::cut_rank(g, s));
            ASSERT_EQ(r, cut_rank(g, VertexSet(s).complement(n)));
        }
    }
}

TEST(CutRank, AverageExamples) {
    EXPECT_EQ(average_cut_rank(star_graph(3)), d("7/8"));
    EXPECT_EQ(average_cut_rank(copies(complete_graph(2), 2)), d("1"));
    EXPECT_EQ(average_cut_rank(cycle_graph(5)), d("25/16"));
    EXPECT_EQ(average_cut_rank(path_graph(6)), d("57/32"));
    EXPECT_EQ(average_cut_rank(Graph(0)), d("0"));
    EXPECT_EQ(average_cut_rank(path_graph(5)), d("23/16"));
    EXPECT_EQ(average_cut_rank(path_graph(4)), d("9/8"));
}

TEST(CutRank, MaxExamples) {
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(max_cut_rank(complete_graph(n)), 1);
    EXPECT_EQ(max_cut_rank(path_graph(4)), 2);
    EXPECT_EQ(max_cut_rank(Graph(6)), 0);
}

TEST(CutRank, EngineMatchesNaiveSweep) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const double p = (trial % 4 + 1) / 5.0;
        const Graph g = oracle::random_graph(rng, n, p);
        const CutRankSummary s = cut_rank_summary(g);
        ASSERT_EQ(s.average, oracle::average_cut_rank(g)) << to_graph6(g);
        ASSERT_EQ(s.max, oracle::max_cut_rank(g)) << to_graph6(g);
        if (g.has_edge()) ASSERT_LE(s.average.exp(), static_cast<unsigned>(n - 1));
    }
}

TEST(CutRank, WorkerCountDoesNotChangeResults) {
    std::mt19937_64 rng(31);
    for (int n : {14, 16, 18}) {
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const CutRankSummary one = cut_rank_summary(g, {24, 1});
        for (int w : {2, 4, 8}) {
            const CutRankSummary many = cut_rank_summary(g, {24, w});
            EXPECT_EQ(one.average, many.average);
            EXPECT_EQ(one.max, many.max);
        }
    }
}

TEST(CutRank, ComponentCap) {
    EXPECT_THROW(average_cut_rank(path_graph(10), {8, 1}), CapacityError);
    // Components are capped separately.
    EXPECT_NO_THROW(average_cut_rank(copies(path_graph(6), 3), {8, 1}));
}

TEST(CutRank, ClosedForms) {
    const std::vector<int> k4{4};
    EXPECT_EQ(closed_form(Family::Complete, k4), d("7/8"));
    const std::vector<int> k22{2, 2};
    EXPECT_EQ(closed_form(Family::CompleteBipartite, k22), d("9/8"));
    const std::vector<int> e0{0};
    EXPECT_EQ(closed_form(Family::E, e0), d("3/4"));
    const std::vector<int> k1{1};
    EXPECT_EQ(closed_form(Family::Complete, k1), d("0"));
    const std::vector<int> p{3};
    EXPECT_THROW(closed_form(Family::Path, p), ParameterError);

    for (int k = 1; k <= 10; ++k) {
        const std::vector<int> a{k};
        EXPECT_EQ(average_cut_rank(complete_graph(k)), closed_form(Family::Complete, a));
        EXPECT_EQ(average_cut_rank(star_graph(k)), closed_form(Family::Star, a));
    }
    for (int k = 0; k <= 8; ++k) {
        const std::vector<int> a{k};
        EXPECT_EQ(average_cut_rank(e_graph(k)), closed_form(Family::E, a));
    }
    for (int m = 1; m <= 6; ++m) {
        for (int k = 1; k <= 6; ++k) {
            const std::vector<int> a{m, k};
            EXPECT_EQ(average_cut_rank(complete_bipartite(m, k)), closed_form(Family::CompleteBipartite, a));
        }
    }
}
