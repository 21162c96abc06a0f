#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the Graph container.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "acr/dyadic.hpp"
#include "acr/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

// Column-by-column Gaussian elimination on a dense 0/1 matrix.
inline int rank(Matrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i != r && m[i][c]) {
                for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
            }
        }
        ++r;
    }
    return r;
}

inline Matrix between(const acr::Graph& g, std::uint64_t x, std::uint64_t y) {
    Matrix m;
    for (int u = 0; u < g.order(); ++u) {
        if (!((x >> u) & 1)) continue;
        std::vector<int> row;
        for (int v = 0; v < g.order(); ++v) {
            if ((y >> v) & 1) row.push_back(g.adjacent(u, v) ? 1 : 0);
        }
        m.push_back(row);
    }
    return m;
}

inline int cut_rank(const acr::Graph& g, std::uint64_t s) {
    const std::uint64_t all = g.order() >= 64 ? ~0ULL : (1ULL << g.order()) - 1;
    return rank(between(g, s, all & ~s));
}

// Sum over every subset divided by 2^n, exactly as the definition reads.
inline acr::Dyadic average_cut_rank(const acr::Graph& g) {
    acr::BigInt total = 0;
    for (std::uint64_t s = 0; s < (1ULL << g.order()); ++s) total += cut_rank(g, s);
    return acr::Dyadic(total, static_cast<unsigned>(g.order()));
}

inline int max_cut_rank(const acr::Graph& g) {
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << g.order()); ++s) best = std::max(best, cut_rank(g, s));
    return best;
}

inline acr::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    acr::Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

// The labeled graph whose edge set is the bit pattern `code` over pairs (u < v)
// in lexicographic order.
inline acr::Graph labeled_graph(int n, std::uint64_t code) {
    acr::Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            if ((code >> k) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace oracle

namespace oracle {

// Least upper-triangle bit string over all n! relabelings, and the number of
// relabelings that fix the graph.
struct BruteCanon {
    std::vector<int> code;
    std::uint64_t automorphisms = 0;
};

inline BruteCanon brute_canon(const acr::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    BruteCanon out;
    bool first = true;
    do {
        // perm[new] = old
        std::vector<int> code;
        bool fixed = true;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                const int b = g.adjacent(perm[i], perm[j]) ? 1 : 0;
                code.push_back(b);
                fixed = fixed && (b == (g.adjacent(i, j) ? 1 : 0));
            }
        }
        if (fixed) ++out.automorphisms;
        if (first || code < out.code) out.code = code;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;

// The recurrence read literally with 300-digit binary floating point. The
// fractional part is computed exactly by modular reduction of the numerator;
// floors within 1e-80 of an integer snap to it, which covers the cases where
// 1 - t is an exact power of two.
inline acr::BigInt x_sequence_float(const acr::Dyadic& eps, int n) {
    auto snap_floor = [](const Float& v) {
        const Float r = boost::multiprecision::round(v);
        if (boost::multiprecision::abs(v - r) < Float("1e-80")) return acr::BigInt(r.convert_to<acr::BigInt>());
        return acr::BigInt(boost::multiprecision::floor(v).convert_to<acr::BigInt>());
    };
    const Float e = Float(eps.num()) / boost::multiprecision::pow(Float(2), static_cast<int>(eps.exp()));
    acr::BigInt x = std::max<acr::BigInt>(snap_floor(Float(2) - boost::multiprecision::log2(Float(1) - e)), 5);
    const acr::BigInt modulus = acr::BigInt(1) << eps.exp();
    for (int i = 1; i <= n; ++i) {
        // {2^x eps / 2} = ((p 2^{x-1}) mod 2^q) / 2^q
        acr::BigInt num = 0;
        if (x - 1 < eps.exp()) num = (eps.num() << (x - 1).convert_to<unsigned>()) % modulus;
        const Float t = Float(num) / Float(modulus);
        const acr::BigInt inner = snap_floor(Float(x) - boost::multiprecision::log2(Float(1) - t) + Float(1));
        x = inner << (8 * i + 10);
    }
    return x;
}

}  // namespace oracle
