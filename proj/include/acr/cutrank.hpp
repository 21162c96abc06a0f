#pragma once

#include <span>

#include "acr/dyadic.hpp"
#include "acr/graph.hpp"
#include "acr/named.hpp"

namespace acr {

struct EngineOptions {
    /// Largest connected component the subset sweep will accept.
    int component_cap = 24;
    /// Threads used for one component's sweep; results do not depend on it.
    int workers = 1;
};

/// rank of A_G[S, V \ S] over GF(2).
int cut_rank(const Graph& g, VertexSet s);

/// rank of A_G[X, Y]; throws DomainError when X and Y overlap.
int cut_rank_bipartite(const Graph& g, VertexSet x, VertexSet y);

struct CutRankSummary {
    Dyadic average;
    int max = 0;
};

/// Average and maximum cut-rank from one sweep. The graph is split into
/// connected components (both quantities add over components); each component
/// sweeps only the subsets containing its first vertex since rho(S) = rho(V \ S).
/// Throws CapacityError when a component exceeds options.component_cap.
CutRankSummary cut_rank_summary(const Graph& g, const EngineOptions& options = {});
Dyadic average_cut_rank(const Graph& g, const EngineOptions& options = {});
int max_cut_rank(const Graph& g, const EngineOptions& options = {});

/// Closed forms: Complete(k) 1 - 2^{1-k}; CompleteBipartite(m,k)
/// (2^m-1)(2^k-1)/2^{m+k-1}; Star(k) 1 - 2^{-k}; E(k) 3/2 - 3/2^{k+2}.
/// Other families throw ParameterError.
Dyadic closed_form(Family family, std::span<const int> params);

}  // namespace acr
