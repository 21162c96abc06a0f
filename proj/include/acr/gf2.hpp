#pragma once

#include <vector>

#include "acr/graph.hpp"

namespace acr {

/// Rank over GF(2) of `count` bit rows, eliminating in place. Rows are taken in
/// order; each nonzero row pivots on its lowest set column.
int rank_inplace(Word* rows, int count) noexcept;

/// Dense matrix over GF(2) with at most 64 columns, one word per row.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);
    Gf2Matrix(int cols, std::vector<Word> rows);

    static Gf2Matrix identity(int k);
    static Gf2Matrix ones(int rows, int cols);
    /// Adjacency matrix of g with `diagonal` written onto the diagonal.
    static Gf2Matrix adjacency(const Graph& g, Word diagonal = 0);
    /// A_G[X, Y] with rows indexed by x in X and columns by y in Y, both increasing.
    static Gf2Matrix submatrix(const Graph& g, VertexSet x, VertexSet y);

    int rows() const noexcept { return static_cast<int>(data_.size()); }
    int cols() const noexcept { return cols_; }
    Word row(int i) const { return data_[static_cast<std::size_t>(i)]; }
    const std::vector<Word>& data() const noexcept { return data_; }

    bool get(int i, int j) const;
    void set(int i, int j, bool value);
    void flip(int i, int j);

    Gf2Matrix transpose() const;
    bool is_symmetric() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    int cols_ = 0;
    std::vector<Word> data_;
};

int rank(const Gf2Matrix& m);

/// Number of pairwise distinct rows; at most 2^rank(m).
int distinct_row_count(const Gf2Matrix& m);

/// Cliques whose edge sets XOR to E(target).
struct CliqueDecomposition {
    std::vector<VertexSet> cliques;
    Graph target;
};

/// XOR of the complete graphs on the given supports, on n vertices.
Graph recompose(const std::vector<VertexSet>& cliques, int n);

/// Writes symmetric a (diagonal arbitrary) as a sum of rank-one terms v v^T.
/// Nonzero diagonal entries are peeled as one term each; a zero-diagonal
/// rank-two remainder x y^T + y x^T is split into the supports of x+y, x, y.
/// Returns the raw supports in peeling order, at most 3 rank(a) / 2 of them,
/// whose XOR recomposes the off-diagonal part of a. Throws DomainError when
/// a is not square and symmetric.
std::vector<VertexSet> symmetric_decompose_supports(const Gf2Matrix& a);

/// As above, as a clique decomposition of the graph with adjacency given by the
/// off-diagonal of a: supports smaller than two vertices are dropped and equal
/// supports cancel in pairs.
CliqueDecomposition symmetric_decompose(const Gf2Matrix& a);

}  // namespace acr
