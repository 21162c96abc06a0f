#include <gtest/gtest.h>

#include <random>

#include "acr/error.hpp"
#include "acr/gf2.hpp"
#include "acr/named.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

oracle::Matrix dense(const Gf2Matrix& m) {
    oracle::Matrix d(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
    }
    return d;
}

Gf2Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::vector<Word> data;
    for (int i = 0; i < rows; ++i) data.push_back(rng() & low_bits(cols));
    return Gf2Matrix(cols, data);
}

}  // namespace

TEST(Gf2, RankExamples) {
    EXPECT_EQ(rank(Gf2Matrix::ones(3, 3)), 1);
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(rank(Gf2Matrix::identity(k)), k);
    EXPECT_EQ(rank(Gf2Matrix(3, {0b011, 0b110, 0b101})), 2);
    EXPECT_EQ(rank(Gf2Matrix(4, 5)), 0);
}

TEST(Gf2, DistinctRows) {
    EXPECT_EQ(distinct_row_count(Gf2Matrix::ones(3, 3)), 1);
    EXPECT_EQ(distinct_row_count(Gf2Matrix::identity(3)), 3);
    EXPECT_EQ(distinct_row_count(Gf2Matrix(5, std::vector<Word>(4, 0))), 1);
}

TEST(Gf2, RankMatchesDenseEliminationAndTransposes) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const int rows = static_cast<int>(rng() % 20);
        const int cols = static_cast<int>(rng() % 20);
        Gf2Matrix m = random_matrix(rng, rows, std::max(cols, 0));
        // Sparse rows make low ranks likely.
        if (trial % 3 == 0) {
            std::vector<Word> d = m.data();
            for (auto& w : d) w &= rng() & rng();
            m = Gf2Matrix(m.cols(), d);
        }
        const int r = rank(m);
        ASSERT_EQ(r, oracle::rank(dense(m)));
        ASSERT_EQ(r, rank(m.transpose()));
        ASSERT_LE(r, std::min(rows, cols));
        if (rows >= 2) {
            std::vector<Word> d = m.data();
            std::swap(d[0], d[rows - 1]);
            d[1] ^= d[0];
            ASSERT_EQ(rank(Gf2Matrix(m.cols(), d)), r);
        }
    }
}

TEST(Gf2, DistinctRowsBoundedByPowerOfRank) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 24);
        const int cols = 1 + static_cast<int>(rng() % 12);
        // Rows drawn from the span of a few generators keep the rank small.
        const int gens = 1 + static_cast<int>(rng() % 4);
        std::vector<Word> basis;
        for (int i = 0; i < gens; ++i) basis.push_back(rng() & low_bits(cols));
        std::vector<Word> data;
        for (int i = 0; i < rows; ++i) {
            Word w = 0;
            for (Word b : basis) {
                if (rng() & 1) w ^= b;
            }
            data.push_back(w);
        }
        const Gf2Matrix m(cols, data);
        ASSERT_LE(distinct_row_count(m), 1 << rank(m));
    }
}

TEST(Gf2, DecomposeAllOnes) {
    const Gf2Matrix a = Gf2Matrix::adjacency(complete_graph(5), low_bits(5));
    const CliqueDecomposition d = symmetric_decompose(a);
    ASSERT_EQ(d.cliques.size(), 1u);
    EXPECT_EQ(d.cliques[0], VertexSet::full(5));
}

TEST(Gf2, DecomposeZeroDiagonalTriangle) {
    // Rank-two zero-diagonal form splitting into three rank-one terms.
    const Gf2Matrix a = Gf2Matrix::adjacency(complete_graph(3));
    const auto raw = symmetric_decompose_supports(a);
    ASSERT_EQ(raw.size(), 3u);
    EXPECT_EQ(raw[0], (VertexSet{0, 1}));
    EXPECT_EQ(raw[1], (VertexSet{1, 2}));
    EXPECT_EQ(raw[2], (VertexSet{0, 2}));
}

TEST(Gf2, DecomposeP3) {
    // Diagonal 0,1,0 gives rank two for P3 (rows 010, 111, 010).
    const Gf2Matrix a = Gf2Matrix::adjacency(path_graph(3), 0b010);
    EXPECT_EQ(rank(a), 2);
    const CliqueDecomposition d = symmetric_decompose(a);
    EXPECT_LE(d.cliques.size(), 3u);
    EXPECT_EQ(recompose(d.cliques, 3), path_graph(3));
}

TEST(Gf2, DecomposeRandomSymmetric) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const Word diag = rng() & low_bits(n);
        const Gf2Matrix a = Gf2Matrix::adjacency(g, diag);
        const int r = rank(a);
        const auto raw = symmetric_decompose_supports(a);
        ASSERT_LE(2 * static_cast<int>(raw.size()), 3 * r);
        const CliqueDecomposition d = symmetric_decompose(a);
        ASSERT_EQ(recompose(d.cliques, n), g);
        ASSERT_LE(2 * static_cast<int>(d.cliques.size()), 3 * r + 1);
        for (VertexSet c : d.cliques) ASSERT_GE(c.size(), 2);
    }
}

TEST(Gf2, DecomposeRejectsAsymmetric) {
    EXPECT_THROW(symmetric_decompose(Gf2Matrix(2, {0b10, 0b00})), DomainError);
    EXPECT_THROW(symmetric_decompose(Gf2Matrix(3, {0b1, 0b1})), DomainError);
}
