#pragma once

#include <vector>

#include "acr/graph.hpp"

namespace acr {

inline constexpr int kEnumerationCap = 9;

/// One graph per isomorphism class on n vertices, each in its canonical
/// labeling, sorted by canonical code. Generated by canonical augmentation:
/// a parent P on n-1 vertices is extended by a vertex with every neighborhood,
/// and a child is kept iff deleting its canonically last vertex gives back P.
/// Results are memoized per n; throws CapacityError above kEnumerationCap.
const std::vector<Graph>& enumerate_graphs(int n, int workers = 1);

}  // namespace acr
