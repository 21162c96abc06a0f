#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

/// Named graph families with fixed vertex numbering:
///   Path(k)              0-1-...-(k-1)
///   Cycle(k)             path plus edge (k-1)-0, k >= 3
///   Complete(k)          K_k
///   CompleteBipartite(m,k)  sides 0..m-1 and m..m+k-1
///   Star(k)              K_{1,k}, center 0, leaves 1..k
///   E(k)                 K_{1,k+1} with one edge subdivided: center 0, leaves 1..k,
///                        then the subdivided path 0-(k+1)-(k+2)
///   Edgeless(k)          k isolated vertices
///   P41, P51, P52, C31, C41: small graphs numbered path/cycle first, then pendants
///                        P41: P4 0-1-2-3 plus pendants 4 on 1 and 5 on 2
///                        P51: P5 0..4 plus pendant 5 on 1
///                        P52: P5 0..4 plus pendant 5 on 2
///                        C31: triangle 0,1,2 plus pendants 3,4,5 on 0,1,2
///                        C41: C4 0..3 plus pendants 4 on 0 and 5 on 2
enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, E, Edgeless, P41, P51, P52, C31, C41 };

Graph make_named(Family family, std::span<const int> params = {});

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int m, int k);
Graph star_graph(int k);
Graph e_graph(int k);

/// m disjoint copies of g.
Graph copies(const Graph& g, int m);

/// Parses names such as "P6", "C5", "K4", "K3,3", "K1,4", "E2", "P4,1", "C3,1",
/// "3K2", "K2+P3", "2K2+P3". Throws ParseError on unknown names.
Graph parse_named(std::string_view name);

}  // namespace acr
