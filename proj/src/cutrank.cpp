#include "acr/cutrank.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>
#include <vector>

#include "acr/error.hpp"
#include "acr/gf2.hpp"

namespace acr {

namespace {

// Rank of the rows of `side` restricted to `other`.
int side_rank(const Graph& g, Word side, Word other) {
    std::array<Word, kMaxVertices> rows;
    int k = 0;
    for (int v : VertexSet(side)) rows[k++] = g.row(v) & other;
    return rank_inplace(rows.data(), k);
}

}  // namespace

int cut_rank(const Graph& g, VertexSet s) {
    const Word in = s.bits() & low_bits(g.order());
    const Word out = low_bits(g.order()) & ~in;
    // The matrix and its transpose have equal rank; eliminate the shorter side.
    return std::popcount(in) <= std::popcount(out) ? side_rank(g, in, out) : side_rank(g, out, in);
}

int cut_rank_bipartite(const Graph& g, VertexSet x, VertexSet y) {
    if (!(x & y).empty()) throw DomainError("cut_rank_bipartite: X and Y overlap");
    const Word live = low_bits(g.order());
    return side_rank(g, x.bits() & live, y.bits() & live);
}

namespace {

struct PartialSum {
    std::uint64_t total = 0;
    int max = 0;
};

// Subsets S = {0} | (gray(i) << 1) for i in [begin, end) of a connected graph
// on m vertices.
PartialSum sweep_range(const Graph& c, std::uint64_t begin, std::uint64_t end) {
    const int m = c.order();
    const Word full = low_bits(m);
    PartialSum acc;
    for (std::uint64_t i = begin; i < end; ++i) {
        const Word s = 1 | ((i ^ (i >> 1)) << 1);
        const Word t = full & ~s;
        const int r = std::popcount(s) <= std::popcount(t) ? side_rank(c, s, t) : side_rank(c, t, s);
        acc.total += static_cast<std::uint64_t>(r);
        acc.max = std::max(acc.max, r);
    }
    return acc;
}

PartialSum sweep_component(const Graph& c, int workers) {
    const std::uint64_t count = std::uint64_t{1} << (c.order() - 1);
    const std::uint64_t w = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1,
                                                      std::max<std::uint64_t>(1, count / 4096));
    if (w <= 1) return sweep_range(c, 0, count);
    std::vector<PartialSum> parts(w);
    {
        std::vector<std::jthread> threads;
        for (std::uint64_t k = 0; k < w; ++k) {
            threads.emplace_back([&, k] { parts[k] = sweep_range(c, count * k / w, count * (k + 1) / w); });
        }
    }
    PartialSum acc;
    for (const auto& p : parts) {
        acc.total += p.total;
        acc.max = std::max(acc.max, p.max);
    }
    return acc;
}

}  // namespace

CutRankSummary cut_rank_summary(const Graph& g, const EngineOptions& options) {
    CutRankSummary out;
    for (VertexSet comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        if (comp.size() > options.component_cap) {
            throw CapacityError("average cut-rank: component of " + std::to_string(comp.size()) +
                                " vertices exceeds the cap of " + std::to_string(options.component_cap));
        }
        const Graph c = induced_subgraph(g, comp);
        const PartialSum p = sweep_component(c, options.workers);
        // Each swept S pairs with its complement: E = 2 * total / 2^m.
        out.average += Dyadic(BigInt(p.total), static_cast<unsigned>(c.order() - 1));
        out.max += p.max;
    }
    return out;
}

Dyadic average_cut_rank(const Graph& g, const EngineOptions& options) {
    return cut_rank_summary(g, options).average;
}

int max_cut_rank(const Graph& g, const EngineOptions& options) { return cut_rank_summary(g, options).max; }

namespace {

int param(std::span<const int> params, std::size_t i, int lo) {
    if (params.size() <= i || params[i] < lo) {
        throw ParameterError("closed_form: parameter " + std::to_string(i) + " missing or below " +
                             std::to_string(lo));
    }
    return params[i];
}

}  // namespace

Dyadic closed_form(Family family, std::span<const int> params) {
    switch (family) {
        case Family::Complete: {
            const int k = param(params, 0, 1);
            return Dyadic::integer(1) - Dyadic::pow2_inverse(static_cast<unsigned>(k - 1));
        }
        case Family::CompleteBipartite: {
            const int m = param(params, 0, 1);
            const int k = param(params, 1, 1);
            BigInt a = (BigInt(1) << m) - 1;
            BigInt b = (BigInt(1) << k) - 1;
            return Dyadic(a * b, static_cast<unsigned>(m + k - 1));
        }
        case Family::Star: {
            const int k = param(params, 0, 1);
            return Dyadic::integer(1) - Dyadic::pow2_inverse(static_cast<unsigned>(k));
        }
        case Family::E: {
            const int k = param(params, 0, 0);
            return Dyadic(BigInt(3), 1) - Dyadic(BigInt(3), static_cast<unsigned>(k + 2));
        }
        default:
            throw ParameterError("closed_form: no closed form for this family");
    }
}

}  // namespace acr
