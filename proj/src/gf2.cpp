#include "acr/gf2.hpp"

#include <algorithm>
#include <map>

#include "acr/error.hpp"

namespace acr {

int rank_inplace(Word* rows, int count) noexcept {
    int r = 0;
    for (int i = 0; i < count; ++i) {
        const Word row = rows[i];
        if (!row) continue;
        const Word pivot = row & (~row + 1);
        ++r;
        for (int j = i + 1; j < count; ++j) {
            if (rows[j] & pivot) rows[j] ^= row;
        }
    }
    return r;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64) throw ParameterError("Gf2Matrix: shape out of range");
    data_.assign(static_cast<std::size_t>(rows), 0);
}

Gf2Matrix::Gf2Matrix(int cols, std::vector<Word> rows) : cols_(cols), data_(std::move(rows)) {
    if (cols < 0 || cols > 64) throw ParameterError("Gf2Matrix: column count out of range");
    for (Word w : data_) {
        if (w & ~low_bits(cols)) throw ParameterError("Gf2Matrix: row has bits beyond the last column");
    }
}

Gf2Matrix Gf2Matrix::identity(int k) {
    Gf2Matrix m(k, k);
    for (int i = 0; i < k; ++i) m.data_[i] = bit(i);
    return m;
}

Gf2Matrix Gf2Matrix::ones(int rows, int cols) {
    Gf2Matrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), low_bits(cols));
    return m;
}

Gf2Matrix Gf2Matrix::adjacency(const Graph& g, Word diagonal) {
    Gf2Matrix m(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i) m.data_[i] = g.row(i) | (diagonal & bit(i));
    return m;
}

Gf2Matrix Gf2Matrix::submatrix(const Graph& g, VertexSet x, VertexSet y) {
    Gf2Matrix m(x.size(), y.size());
    int i = 0;
    for (int u : x) {
        Word out = 0;
        int j = 0;
        for (int v : y) {
            if (g.adjacent(u, v)) out |= bit(j);
            ++j;
        }
        m.data_[i++] = out;
    }
    return m;
}

bool Gf2Matrix::get(int i, int j) const { return (row(i) >> j) & 1U; }

void Gf2Matrix::set(int i, int j, bool value) {
    if (value) {
        data_.at(static_cast<std::size_t>(i)) |= bit(j);
    } else {
        data_.at(static_cast<std::size_t>(i)) &= ~bit(j);
    }
}

void Gf2Matrix::flip(int i, int j) { data_.at(static_cast<std::size_t>(i)) ^= bit(j); }

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows());
    for (int i = 0; i < rows(); ++i) {
        for (int j : VertexSet(data_[i])) t.data_[j] |= bit(i);
    }
    return t;
}

bool Gf2Matrix::is_symmetric() const { return rows() == cols_ && transpose() == *this; }

int rank(const Gf2Matrix& m) {
    std::vector<Word> rows = m.data();
    return rank_inplace(rows.data(), static_cast<int>(rows.size()));
}

int distinct_row_count(const Gf2Matrix& m) {
    std::vector<Word> rows = m.data();
    std::sort(rows.begin(), rows.end());
    return static_cast<int>(std::unique(rows.begin(), rows.end()) - rows.begin());
}

Graph recompose(const std::vector<VertexSet>& cliques, int n) {
    Graph g(n);
    for (VertexSet c : cliques) {
        for (int u : c) {
            g.toggle_row(u, c.bits() & ~low_bits(u + 1));
        }
    }
    return g;
}

std::vector<VertexSet> symmetric_decompose_supports(const Gf2Matrix& a) {
    if (!a.is_symmetric()) throw DomainError("symmetric_decompose: matrix is not symmetric");
    const int n = a.rows();
    std::vector<Word> m = a.data();
    std::vector<VertexSet> out;
    auto column = [&](int j) {
        Word c = 0;
        for (int i = 0; i < n; ++i) c |= ((m[i] >> j) & 1U) << i;
        return c;
    };
    // m -= x y^T for column vectors x, y.
    auto subtract_outer = [&](Word x, Word y) {
        for (int i : VertexSet(x)) m[i] ^= y;
    };
    for (;;) {
        int diag = -1;
        for (int i = 0; i < n && diag < 0; ++i) {
            if ((m[i] >> i) & 1U) diag = i;
        }
        if (diag >= 0) {
            // A_ii = 1: removing v v^T with v the i-th column drops the rank by one.
            const Word v = column(diag);
            subtract_outer(v, v);
            out.emplace_back(v);
            continue;
        }
        int pi = -1;
        int pj = -1;
        for (int i = 0; i < n && pi < 0; ++i) {
            if (m[i]) {
                pi = i;
                pj = std::countr_zero(m[i]);
            }
        }
        if (pi < 0) break;
        // Zero diagonal, A_ij = 1 with i < j. With x, y the columns i, j we have
        // x_i = y_j = 0 and x_j = y_i = 1, so x y^T + y x^T removes rank two.
        const Word x = column(pi);
        const Word y = column(pj);
        subtract_outer(x, y);
        subtract_outer(y, x);
        out.emplace_back(x ^ y);
        out.emplace_back(x);
        out.emplace_back(y);
    }
    return out;
}

CliqueDecomposition symmetric_decompose(const Gf2Matrix& a) {
    const std::vector<VertexSet> raw = symmetric_decompose_supports(a);
    std::map<Word, int> parity;
    for (VertexSet s : raw) {
        if (s.size() >= 2) parity[s.bits()] ^= 1;
    }
    CliqueDecomposition d;
    d.target = Graph(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = i + 1; j < a.rows(); ++j) {
            if (a.get(i, j)) d.target.add_edge(i, j);
        }
    }
    for (VertexSet s : raw) {
        auto it = parity.find(s.bits());
        if (it != parity.end() && it->second) {
            d.cliques.push_back(s);
            it->second = 0;
        }
    }
    if (recompose(d.cliques, a.rows()) != d.target) {
        throw IntegrityError("symmetric_decompose: recomposition differs from input");
    }
    return d;
}

}  // namespace acr
