#include <gtest/gtest.h>

#include <random>

#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/named.hpp"
#include "acr/parameters.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

// Over GF(2) the fewest rank-one symmetric terms summing to a symmetric M is
// rank(M), plus one when M is nonzero with zero diagonal. Single-vertex terms
// only touch the diagonal, so cd is the minimum of that count over diagonals.
int cd_by_rank_formula(const Graph& g) {
    const int n = g.order();
    int best = 1 << 20;
    for (Word d = 0; d < (Word{1} << n); ++d) {
        oracle::Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = g.adjacent(i, j) ? 1 : 0;
            m[i][i] = (d >> i) & 1;
        }
        const int r = oracle::rank(m);
        best = std::min(best, r + ((d == 0 && g.has_edge()) ? 1 : 0));
    }
    return best;
}

// Plain enumeration of clique multisets of size t (supports of size >= 2).
bool brute_cover(const Graph& g, int t, Word min_support) {
    if (t == 0) return !g.has_edge();
    const int n = g.order();
    for (Word c = min_support; c < (Word{1} << n); ++c) {
        if (std::popcount(c) < 2) continue;
        Graph next = g;
        for (int a : VertexSet(c)) {
            for (int b : VertexSet(c)) {
                if (a < b) next.toggle_edge(a, b);
            }
        }
        if (brute_cover(next, t - 1, c + 1)) return true;
    }
    return false;
}

int brute_cd(const Graph& g) {
    for (int t = 0;; ++t) {
        if (brute_cover(g, t, 0)) return t;
    }
}

}  // namespace

TEST(Parameters, NeighborhoodDiversity) {
    EXPECT_EQ(neighborhood_diversity(complete_graph(6)), 1);
    EXPECT_EQ(neighborhood_diversity(path_graph(4)), 4);
    EXPECT_EQ(neighborhood_diversity(complete_bipartite(3, 5)), 2);
}

TEST(Parameters, MinRankF2) {
    for (int n = 2; n <= 8; ++n) {
        const MinRankF2 k = min_rank_f2(complete_graph(n));
        EXPECT_EQ(k.rank, 1);
        EXPECT_EQ(k.diagonal, low_bits(n));
    }
    EXPECT_EQ(min_rank_f2(path_graph(3)).rank, 2);
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(min_rank_f2(path_graph(n)).rank, n - 1);
    EXPECT_THROW(min_rank_f2(Graph(21)), CapacityError);
}

TEST(Parameters, MinRankF2WitnessAndWorkers) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n);
        const MinRankF2 m = min_rank_f2(g);
        const Gf2Matrix a = Gf2Matrix::adjacency(g, m.diagonal);
        ASSERT_EQ(rank(a), m.rank);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) ASSERT_EQ(a.get(i, j), g.adjacent(i, j));
            }
        }
        const MinRankF2 par = min_rank_f2(g, 4);
        ASSERT_EQ(par.rank, m.rank);
        ASSERT_EQ(par.diagonal, m.diagonal);
    }
}

TEST(Parameters, MinRankF3) {
    for (int n = 1; n <= 5; ++n) {
        // K1 is realized by the zero matrix.
        EXPECT_EQ(min_rank_f3(complete_graph(n)), n >= 2 ? 1 : 0);
        EXPECT_EQ(min_rank_f3(Graph(n)), 0);
    }
    EXPECT_EQ(min_rank_f3(path_graph(3)), 2);
    EXPECT_THROW(min_rank_f3(Graph(6)), CapacityError);
}

TEST(Parameters, CliqueDeltaCoverExamples) {
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(clique_delta_cover(complete_graph(n)).exact, 1);
    const CliqueDeltaCover c4 = clique_delta_cover(cycle_graph(4));
    EXPECT_EQ(c4.exact, 2);
    EXPECT_EQ(recompose(c4.witness, 4), cycle_graph(4));
    EXPECT_EQ(clique_delta_cover(path_graph(3)).exact, 2);
    EXPECT_EQ(clique_delta_cover(Graph(4)).exact, 0);
    EXPECT_FALSE(clique_delta_cover(path_graph(12), 10).exact.has_value());
}

TEST(Parameters, CliqueDeltaCoverAgreesWithIndependentRoutes) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.3 + 0.1 * (trial % 5));
        const CliqueDeltaCover c = clique_delta_cover(g);
        ASSERT_TRUE(c.exact.has_value());
        ASSERT_EQ(*c.exact, cd_by_rank_formula(g)) << to_graph6(g);
        if (n <= 5) ASSERT_EQ(*c.exact, brute_cd(g)) << to_graph6(g);
        ASSERT_EQ(recompose(c.witness, n), g);
        ASSERT_EQ(static_cast<int>(c.witness.size()), *c.exact);
        ASSERT_EQ(recompose(c.upper.cliques, n), g);
        const int mr = min_rank_f2(g).rank;
        ASSERT_LE(*c.exact, static_cast<int>(c.upper.cliques.size()));
        ASSERT_LE(2 * static_cast<int>(c.upper.cliques.size()), 3 * mr + 1);
    }
}

TEST(Parameters, CliqueDeltaCoverAtTenVertices) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 3; ++trial) {
        const Graph g = oracle::random_graph(rng, 10, 0.5);
        const CliqueDeltaCover c = clique_delta_cover(g);
        ASSERT_TRUE(c.exact.has_value());
        EXPECT_EQ(*c.exact, cd_by_rank_formula(g));
    }
}

TEST(Parameters, LessThanPow2) {
    EXPECT_TRUE(less_than_pow2(3, Dyadic::parse("2")));
    EXPECT_FALSE(less_than_pow2(4, Dyadic::parse("2")));
    // 2^{5/2} = 5.65...
    EXPECT_TRUE(less_than_pow2(5, Dyadic::parse("5/2")));
    EXPECT_FALSE(less_than_pow2(6, Dyadic::parse("5/2")));
    // 2^{9/4} = 4.75...
    EXPECT_TRUE(less_than_pow2(4, Dyadic::parse("9/4")));
    EXPECT_FALSE(less_than_pow2(5, Dyadic::parse("9/4")));
    EXPECT_TRUE(less_than_pow2(0, Dyadic::parse("0")));
}

TEST(Parameters, ChainExamples) {
    const ParamReport p3 = verify_chain(path_graph(3));
    EXPECT_EQ(p3.avg, Dyadic::parse("3/4"));
    EXPECT_EQ(p3.max_rho, 1);
    EXPECT_EQ(p3.mr2->rank, 2);
    EXPECT_EQ(p3.nd, 2);
    EXPECT_TRUE(p3.chain_ok("i"));

    const ParamReport k2 = verify_chain(complete_graph(2));
    EXPECT_EQ(k2.cd, 1);
    EXPECT_EQ(k2.mr2->rank, 1);
    EXPECT_TRUE(k2.chain_ok("ii"));

    const ParamReport k22 = verify_chain(complete_bipartite(2, 2));
    EXPECT_EQ(k22.nd, 2);
    EXPECT_EQ(k22.mr2->rank, 2);
    EXPECT_TRUE(k22.chain_ok("iii-F2"));
    EXPECT_TRUE(k22.chain_ok("iii-F3"));
    EXPECT_TRUE(k22.all_ok());

    EXPECT_THROW(verify_chain(Graph(3)), DomainError);
    const ParamReport big = verify_chain(path_graph(11));
    EXPECT_FALSE(big.cd.has_value());
    EXPECT_FALSE(big.gaps.empty());
    EXPECT_TRUE(big.all_ok());
}
