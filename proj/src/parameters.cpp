#include "acr/parameters.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "acr/error.hpp"
#include "acr/structure.hpp"

namespace acr {

int neighborhood_diversity(const Graph& g) { return static_cast<int>(twin_classes(g).size()); }

namespace {

MinRankF2 diagonal_sweep(const Graph& g, Word begin, Word end) {
    const int n = g.order();
    MinRankF2 best{n + 1, 0};
    std::array<Word, kMaxVertices> rows;
    for (Word d = begin; d < end; ++d) {
        for (int i = 0; i < n; ++i) rows[i] = g.row(i) | (d & bit(i));
        const int r = rank_inplace(rows.data(), n);
        if (r < best.rank) best = {r, d};
    }
    return best;
}

}  // namespace

MinRankF2 min_rank_f2(const Graph& g, int workers) {
    const int n = g.order();
    if (n > 20) throw CapacityError("min_rank_f2: " + std::to_string(n) + " vertices exceeds the cap of 20");
    if (n == 0) return {};
    const Word count = Word{1} << n;
    const Word w = std::clamp<Word>(static_cast<Word>(std::max(workers, 1)), 1, std::max<Word>(1, count / 1024));
    if (w <= 1) return diagonal_sweep(g, 0, count);
    std::vector<MinRankF2> parts(w);
    {
        std::vector<std::jthread> threads;
        for (Word k = 0; k < w; ++k) {
            threads.emplace_back([&, k] { parts[k] = diagonal_sweep(g, count * k / w, count * (k + 1) / w); });
        }
    }
    // Ties go to the least diagonal, as in the sequential sweep.
    MinRankF2 best = parts[0];
    for (const auto& p : parts) {
        if (p.rank < best.rank) best = p;
    }
    return best;
}

namespace {

int rank_f3(std::array<std::array<int, 5>, 5> m, int n) {
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = r;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[r]);
        const int inv = m[r][c];  // 1 and 2 are their own inverses mod 3
        for (int j = 0; j < n; ++j) m[r][j] = (m[r][j] * inv) % 3;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const int f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % 3 + 3) % 3;
        }
        ++r;
    }
    return r;
}

}  // namespace

int min_rank_f3(const Graph& g) {
    const int n = g.order();
    if (n > 5) throw CapacityError("min_rank_f3: " + std::to_string(n) + " vertices exceeds the cap of 5");
    const auto edges = g.edges();
    const int e = static_cast<int>(edges.size());
    int diag_count = 1;
    for (int i = 0; i < n; ++i) diag_count *= 3;
    int best = n;
    for (int signs = 0; signs < (1 << e); ++signs) {
        std::array<std::array<int, 5>, 5> m{};
        for (int k = 0; k < e; ++k) {
            const int value = ((signs >> k) & 1) ? 2 : 1;
            m[edges[k].first][edges[k].second] = value;
            m[edges[k].second][edges[k].first] = value;
        }
        for (int d = 0; d < diag_count; ++d) {
            int code = d;
            for (int i = 0; i < n; ++i) {
                m[i][i] = code % 3;
                code /= 3;
            }
            best = std::min(best, rank_f3(m, n));
        }
    }
    return best;
}

namespace {

class CoverSearch {
public:
    explicit CoverSearch(int n) : n_(n) {}

    bool search(const Graph& residual, int budget, std::vector<VertexSet>& chosen) {
        if (!residual.has_edge()) return true;
        if (budget == 0) return false;
        if (min_rank_f2(residual).rank > budget) return false;
        int u = 0;
        while (residual.row(u) == 0) ++u;
        const int v = std::countr_zero(residual.row(u));
        const Word others = low_bits(n_) & ~(bit(u) | bit(v));
        // Every subset of the other vertices, in increasing mask order.
        Word x = 0;
        do {
            const VertexSet c(x | bit(u) | bit(v));
            Graph next = residual;
            for (int a : c) next.toggle_row(a, c.bits() & ~low_bits(a + 1));
            chosen.push_back(c);
            if (search(next, budget - 1, chosen)) return true;
            chosen.pop_back();
            x = (x - others) & others;
        } while (x != 0);
        return false;
    }

private:
    int n_;
};

}  // namespace

int clique_delta_cover_exact(const Graph& g, std::vector<VertexSet>* witness, int cap) {
    if (g.order() > cap) {
        throw CapacityError("clique_delta_cover: exact search capped at " + std::to_string(cap) + " vertices");
    }
    CoverSearch s(g.order());
    for (int t = 0;; ++t) {
        std::vector<VertexSet> chosen;
        if (s.search(g, t, chosen)) {
            if (witness) *witness = chosen;
            return t;
        }
    }
}

CliqueDeltaCover clique_delta_cover(const Graph& g, int exact_cap) {
    CliqueDeltaCover out;
    if (g.order() <= 20) {
        out.upper = symmetric_decompose(Gf2Matrix::adjacency(g, min_rank_f2(g).diagonal));
    } else {
        // Any diagonal gives a valid, if weaker, decomposition.
        out.upper = symmetric_decompose(Gf2Matrix::adjacency(g));
    }
    if (g.order() <= exact_cap) {
        std::vector<VertexSet> w;
        out.exact = clique_delta_cover_exact(g, &w, exact_cap);
        out.witness = std::move(w);
        if (*out.exact > static_cast<int>(out.upper.cliques.size())) {
            throw IntegrityError("clique_delta_cover: exact value exceeds the constructive bound");
        }
    }
    return out;
}

bool less_than_pow2(const BigInt& n, const Dyadic& x) {
    if (n <= 0) return true;
    const BigInt k_big = x.floor();
    if (k_big > 1000000) return true;  // n is far smaller than 2^k
    const unsigned k = k_big.convert_to<unsigned>();
    const BigInt lo = BigInt(1) << k;
    if (n < lo) return true;
    if (n >= (lo << 1)) return false;
    if (x.is_integer()) return false;
    // 2^k <= n < 2^{k+1} and x = p/2^q is not an integer: compare n^{2^q} with 2^p.
    BigInt lhs = n;
    for (unsigned i = 0; i < x.exp(); ++i) lhs *= lhs;
    // Here p < (k+1) 2^q, so both sides have about (k+1) 2^q bits.
    const auto p = x.num().convert_to<unsigned long long>();
    return lhs < (BigInt(1) << p);
}

bool ParamReport::chain_ok(const std::string& chain) const {
    return std::all_of(comparisons.begin(), comparisons.end(),
                       [&](const ChainComparison& c) { return c.chain != chain || c.holds; });
}

bool ParamReport::all_ok() const {
    return std::all_of(comparisons.begin(), comparisons.end(), [](const ChainComparison& c) { return c.holds; });
}

namespace {

std::string pow2_text(const std::string& exponent) { return "2^(" + exponent + ")"; }

}  // namespace

ParamReport verify_chain(const Graph& g, const ParamOptions& options) {
    if (!g.has_edge()) throw DomainError("verify_chain: graph has no edge");
    ParamReport r;
    const CutRankSummary s = cut_rank_summary(g, options.engine);
    r.avg = s.average;
    r.max_rho = s.max;
    r.nd = neighborhood_diversity(g);
    if (g.order() <= options.mr2_cap) {
        r.mr2 = min_rank_f2(g, options.engine.workers);
    } else {
        r.gaps.push_back("mr(F2) skipped: order above " + std::to_string(options.mr2_cap));
    }
    if (g.order() <= options.mr3_cap) {
        r.mr3 = min_rank_f3(g);
    } else {
        r.gaps.push_back("mr(F3) skipped: order above " + std::to_string(options.mr3_cap));
    }
    const CliqueDeltaCover cover = clique_delta_cover(g, options.cd_exact_cap);
    r.cd_upper = cover.upper;
    if (cover.exact) {
        r.cd = cover.exact;
        r.cd_witness = cover.witness;
        if (recompose(r.cd_witness, g.order()) != g) {
            throw IntegrityError("verify_chain: clique delta-cover witness does not recompose");
        }
    } else {
        r.gaps.push_back("exact cd skipped: order above " + std::to_string(options.cd_exact_cap));
    }

    auto add = [&](const char* chain, std::string relation, std::string lhs, std::string rhs, bool holds) {
        r.comparisons.push_back({chain, std::move(relation), std::move(lhs), std::move(rhs), holds});
    };
    const Dyadic maxd = Dyadic::integer(r.max_rho);
    const std::string avg = r.avg.to_string();
    const std::string eight_avg_plus_2 = (r.avg.scaled(3) + Dyadic::integer(2)).to_string();
    const std::string max_exp = std::to_string(2 * r.max_rho + 2);

    add("i", "Erho < maxrho", avg, std::to_string(r.max_rho), r.avg < maxd);
    if (r.mr2) {
        add("i", "maxrho <= mr(F2)", std::to_string(r.max_rho), std::to_string(r.mr2->rank), r.max_rho <= r.mr2->rank);
        add("i", "mr(F2) <= nd", std::to_string(r.mr2->rank), std::to_string(r.nd), r.mr2->rank <= r.nd);
    }
    // nd < 2^{2 maxrho + 2}, a plain integer comparison.
    add("i", "nd < 2^(2maxrho+2)", std::to_string(r.nd), pow2_text(max_exp),
        BigInt(r.nd) < (BigInt(1) << (2 * r.max_rho + 2)));
    // 2^{2 maxrho + 2} <= 2^{8 Erho + 2} iff maxrho <= 4 Erho.
    add("i", "2^(2maxrho+2) <= 2^(8Erho+2)", pow2_text(max_exp), pow2_text(eight_avg_plus_2),
        maxd <= r.avg.scaled(2));
    add("i", "nd < 2^(8Erho+2)", std::to_string(r.nd), pow2_text(eight_avg_plus_2),
        less_than_pow2(BigInt(r.nd), r.avg.scaled(3) + Dyadic::integer(2)));

    if (r.cd) {
        add("ii", "Erho < cd", avg, std::to_string(*r.cd), r.avg < Dyadic::integer(*r.cd));
        if (r.mr2) {
            add("ii", "cd <= 3/2 mr(F2)", std::to_string(*r.cd), "3/2*" + std::to_string(r.mr2->rank),
                2 * *r.cd <= 3 * r.mr2->rank);
        }
        add("ii", "nd <= 2^cd", std::to_string(r.nd), pow2_text(std::to_string(*r.cd)),
            BigInt(r.nd) <= (BigInt(1) << *r.cd));
    }
    if (r.mr2) {
        add("ii", "3/2 mr(F2) <= 3/2 nd", std::to_string(r.mr2->rank), std::to_string(r.nd), r.mr2->rank <= r.nd);
        add("ii", "cd upper bound <= 3/2 mr(F2)", std::to_string(r.cd_upper.cliques.size()),
            "3/2*" + std::to_string(r.mr2->rank), 2 * static_cast<int>(r.cd_upper.cliques.size()) <= 3 * r.mr2->rank);
        add("iii-F2", "nd <= 2^mr(F2)", std::to_string(r.nd), pow2_text(std::to_string(r.mr2->rank)),
            BigInt(r.nd) <= (BigInt(1) << r.mr2->rank));
        add("iii-F2", "2^mr(F2) <= 2^nd", pow2_text(std::to_string(r.mr2->rank)), pow2_text(std::to_string(r.nd)),
            r.mr2->rank <= r.nd);
    }
    if (r.mr3) {
        BigInt p3 = 1;
        for (int i = 0; i < *r.mr3; ++i) p3 *= 3;
        add("iii-F3", "nd <= 3^mr(F3)", std::to_string(r.nd), "3^" + std::to_string(*r.mr3), BigInt(r.nd) <= p3);
        add("iii-F3", "3^mr(F3) <= 3^nd", "3^" + std::to_string(*r.mr3), "3^" + std::to_string(r.nd), *r.mr3 <= r.nd);
    }
    return r;
}

}  // namespace acr
