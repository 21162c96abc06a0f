#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

enum class Tri { False, True, Indeterminate };

const char* to_string(Tri t);

/// G*v: complements the adjacency among the neighbors of v.
Graph local_complement(const Graph& g, int v);

/// G*u*v*u for an edge uv; throws DomainError when uv is not an edge.
Graph pivot(const Graph& g, int u, int v);

/// Labeled closure of {g} under local complementations.
struct Orbit {
    std::vector<Graph> members;  // breadth-first discovery order
    bool truncated = false;      // stopped after `cap` members
};

Orbit orbit(const Graph& g, std::size_t cap = 200000);

/// The same closure up to isomorphism, as sorted canonical codes.
struct OrbitClasses {
    std::vector<std::string> codes;
    bool truncated = false;
};

OrbitClasses orbit_classes(const Graph& g, std::size_t cap = 200000);

/// Indeterminate only when an orbit was truncated.
Tri are_locally_equivalent(const Graph& g, const Graph& h, std::size_t cap = 200000);

/// G - v, (G*v) - v and, when v has a neighbor, (G pivot uv) - v for the least
/// neighbor u; pairwise non-isomorphic.
std::vector<Graph> elementary_vertex_minors(const Graph& g, int v);

enum class ReductionKind { Delete, LcDelete, PivotDelete };

struct Reduction {
    ReductionKind kind;
    int v;
    int u;  // pivot partner, -1 otherwise
    Graph result;
};

/// Every one-vertex reduction of every vertex, with every pivot partner.
std::vector<Reduction> elementary_reductions(const Graph& g);

/// Steps "LC v", "PIVOT u v", "DELETE v", all in the host's labels.
using VmWitness = std::vector<std::string>;

struct VmOptions {
    std::size_t orbit_cap = 200000;
    /// Distinct graphs the search may expand before giving up.
    std::size_t node_cap = 2000000;
    /// Skip branches whose average cut-rank is below that of the minor. Turn
    /// off for checks that must not lean on the monotonicity theorem.
    bool prune_by_average = true;
    /// Precomputed orbit_classes(h), reused across many hosts.
    const OrbitClasses* target_classes = nullptr;
};

struct VmResult {
    Tri answer = Tri::False;
    VmWitness witness;  // set when answer is True
};

/// Depth-first search over elementary reductions (all vertices, all three
/// kinds, every pivot partner) until a graph locally equivalent to h is met.
/// Failed graphs are memoized by canonical code and branches whose average
/// cut-rank falls below that of h are pruned.
VmResult is_vertex_minor(const Graph& h, const Graph& g, const VmOptions& options = {});

/// Applies a witness to the host; the result is isomorphic to the minor.
Graph replay_witness(const Graph& host, const VmWitness& steps);

struct PathVmResult {
    int length = 0;  // edges of the longest path vertex-minor
    Tri determinate = Tri::True;
};

PathVmResult longest_path_vm(const Graph& g, const VmOptions& options = {});

}  // namespace acr
