#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

/// Search-based canonization handles at most this many vertices.
inline constexpr int kCanonicalCap = 16;

struct CanonicalForm {
    /// graph6 of the canonically relabeled graph.
    std::string canon;
    /// labeling[old] = new.
    std::vector<int> labeling;
    std::uint64_t aut_count = 0;
};

/// Canonical labeling by color refinement and individualization. Among the
/// leaves of the search tree the one with the least adjacency encoding (graph6
/// bit order) is chosen; subtrees equivalent under automorphisms found along
/// the way are skipped. Optional vertex colors must be preserved by the
/// labeling (vertices end up sorted by color). Throws CapacityError above
/// kCanonicalCap vertices.
std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// graph6 of the canonical relabeling; equal iff the graphs are isomorphic.
std::string canonical_code(const Graph& g);

/// As canonical_code, but isomorphisms must preserve the colors. The colors in
/// canonical order are prefixed to the code.
std::string colored_canonical_code(const Graph& g, std::span<const int> colors);

/// Canonical code together with the order of the automorphism group.
CanonicalForm canonical_form(const Graph& g);

std::uint64_t automorphism_count(const Graph& g, std::span<const int> colors = {});

bool are_isomorphic(const Graph& g, const Graph& h);

/// Isomorphism certificate for forests of any order (rooted at tree centers,
/// children codes sorted). Throws DomainError when f is not a forest.
std::string forest_canonical_code(const Graph& f);

}  // namespace acr
