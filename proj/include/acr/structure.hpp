#pragma once

#include <vector>

#include "acr/graph.hpp"

namespace acr {

/// x, y distinct with N(x) \ {x,y} == N(y) \ {x,y}.
bool are_twins(const Graph& g, int x, int y);

/// Maximal sets of pairwise twins, ordered by least member.
std::vector<VertexSet> twin_classes(const Graph& g);

/// One of the three shapes an equivalence class of the cut-rank relation can take.
enum class ClassKind { AttachedStar, TrueTwinClique, FalseTwinIndependent };

const char* to_string(ClassKind kind);

struct EquivClass {
    VertexSet members;
    ClassKind kind;
    /// Star center for AttachedStar; the least member otherwise. For a K2 class
    /// the lower index is the center.
    int center;
};

/// Partition of V(G) by x ~ y iff rho({x}) = rho({y}) >= rho({x,y}),
/// i.e. x, y are twins, or one is a leaf whose only neighbor is the other.
struct EquivPartition {
    std::vector<EquivClass> classes;  // ordered by least member

    /// Index into `classes` of the class containing v.
    int class_of(int v) const;
};

/// Direct pairwise test of the relation via the two-case characterization.
bool cut_rank_equivalent(const Graph& g, int x, int y);

EquivPartition equiv_classes(const Graph& g);

/// Quotient of a forest by the cut-rank equivalence, weighted by class sizes.
struct WeightedQuotient {
    Graph graph;                // vertex i = class i
    std::vector<int> weights;   // |class i|
    std::vector<int> centers;   // class center, a vertex of the original forest
    std::vector<VertexSet> classes;
};

/// Throws DomainError unless f is a forest without isolated vertices.
WeightedQuotient quotient_pi(const Graph& f);

/// Number of vertices in the largest attached star (1 when there are no leaves).
int largest_attached_star(const Graph& g);

}  // namespace acr
