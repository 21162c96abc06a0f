#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acr/cutrank.hpp"
#include "acr/gf2.hpp"
#include "acr/graph.hpp"

namespace acr {

int neighborhood_diversity(const Graph& g);

struct MinRankF2 {
    int rank = 0;
    Word diagonal = 0;  // a minimizing diagonal
};

/// Over GF(2) the off-diagonal entries are forced, so only the 2^n diagonals
/// are searched. Throws CapacityError above 20 vertices.
MinRankF2 min_rank_f2(const Graph& g, int workers = 1);

/// Full search over symmetric F3 realizations (off-diagonal in {1,2} on edges,
/// diagonal in {0,1,2}). Throws CapacityError above 5 vertices.
int min_rank_f3(const Graph& g);

struct CliqueDeltaCover {
    std::optional<int> exact;           // unset when the exact search was skipped
    std::vector<VertexSet> witness;     // optimal cliques when exact is set
    CliqueDecomposition upper;          // from a minimum-rank realization
};

/// Exact search by iterative deepening: each step picks a clique containing
/// the least uncovered edge, and a branch is cut when the minimum F2 rank of
/// the remaining edge set exceeds the cliques left (each clique adds a
/// symmetric rank-one term). Runs when |g| <= exact_cap; the constructive upper
/// bound is always returned.
CliqueDeltaCover clique_delta_cover(const Graph& g, int exact_cap = 10);

/// Exact search alone; throws CapacityError above `cap` vertices.
int clique_delta_cover_exact(const Graph& g, std::vector<VertexSet>* witness = nullptr, int cap = 10);

struct ChainComparison {
    std::string chain;     // "i", "ii", "iii-F2", "iii-F3"
    std::string relation;  // e.g. "Erho < maxrho"
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

struct ParamOptions {
    EngineOptions engine;
    int mr2_cap = 20;
    int mr3_cap = 5;
    int cd_exact_cap = 10;
};

struct ParamReport {
    Dyadic avg;
    int max_rho = 0;
    int nd = 0;
    std::optional<MinRankF2> mr2;
    std::optional<int> mr3;
    std::optional<int> cd;
    std::vector<VertexSet> cd_witness;
    CliqueDecomposition cd_upper;
    std::vector<ChainComparison> comparisons;
    std::vector<std::string> gaps;  // comparisons skipped because a cap was hit

    /// Every recorded comparison in the given chain holds.
    bool chain_ok(const std::string& chain) const;
    bool all_ok() const;
};

/// Evaluates every inequality of the tied-parameter chains exactly. Requires at
/// least one edge (DomainError otherwise).
ParamReport verify_chain(const Graph& g, const ParamOptions& options = {});

/// Exact test of n < 2^x for a nonnegative dyadic x.
bool less_than_pow2(const BigInt& n, const Dyadic& x);

}  // namespace acr
