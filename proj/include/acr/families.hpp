#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acr/cutrank.hpp"
#include "acr/dyadic.hpp"
#include "acr/graph.hpp"
#include "acr/local_ops.hpp"
#include "acr/obstructions.hpp"

namespace acr {

/// floor(1 - log2(1 - eps)) for dyadic eps in [0, 1); eps = 0 gives 1 (K2).
int base_star_size(const Dyadic& eps);

/// Least q >= 1 with Eρ(g) + 1 - 2^-q > alpha + 1, by exact comparison.
/// Throws IntegrityError when Eρ(g) <= alpha (no such q exists) or when the
/// result is below the largest attached star of g.
int q1(const Graph& g, const Dyadic& alpha, const EngineOptions& engine = {});

/// Least k >= 1 with Eρ(attach_star(g, v, k)) > alpha + 1, each candidate run
/// through the engine. Throws IntegrityError unless the result is q1 - 1 or q1.
int q2(const Graph& g, int v, const Dyadic& alpha, const EngineOptions& engine = {});

enum class StepKind { Base, AddStar, AttachStar };

const char* to_string(StepKind kind);

struct FamilyStep {
    StepKind kind = StepKind::Base;
    int size = 0;  // s of K_{1,s}
    int at = -1;   // host vertex joined to the new center (AttachStar only)
    /// Whether the graph the threshold was taken from was confirmed to lie in
    /// L_{<=alpha}. Indeterminate when the check ran into engine caps.
    Tri precondition = Tri::True;
};

struct FamilyEntry {
    Graph forest;
    std::vector<FamilyStep> provenance;
    Dyadic eps;
    int n = 0;
    std::optional<Dyadic> avg;  // empty when a component exceeds the engine cap
};

struct ForestFamily {
    Dyadic eps;
    int n = 0;
    std::vector<FamilyEntry> members;
    bool partial = false;
    std::string partial_reason;
};

struct FamilyOptions {
    EngineOptions engine;
    /// Re-check each intermediate graph's membership before taking q1/q2 from it.
    bool verify_preconditions = true;
};

/// Base star K_{1,s}; odd steps add K_{1,q1} as a new component; even steps
/// add K_{1,q1} and then, for every class center v of the parent, a K_{1,q2}
/// joined to v. Requires 0 <= eps < 1 and 0 <= n <= 5. Capacity problems stop
/// the construction and set `partial`.
ForestFamily build_family(const Dyadic& eps, int n, const FamilyOptions& options = {});

/// Rebuilds the forest from its steps.
Graph replay(const std::vector<FamilyStep>& steps);

/// Tri::True iff Eρ(g) is above alpha in the given mode and every elementary
/// vertex-minor is not. Only the component containing the reduced vertex is
/// recomputed. Indeterminate when a component is over the engine cap.
Tri in_minimal_class(const Graph& g, const Dyadic& alpha, ThresholdMode mode, const EngineOptions& engine = {});

/// Membership of the entry in L_{<=eps+n}.
Tri family_minimality_check(const FamilyEntry& entry, const EngineOptions& engine = {});

/// Minimality of every member, checked in parallel; results by member index.
std::vector<Tri> check_members(const ForestFamily& family, int workers, const EngineOptions& engine = {});

struct StructureCheck {
    bool ok = true;
    int quotient_order = 0;
    std::vector<std::string> problems;
};

/// |π(f)| = n + 1; no weight occurs more than twice; a repeated weight sits in
/// two different components of π(f), one of them at its component's minimum.
StructureCheck check_structure(const Graph& f, int n);

/// (2k-1)!! with (-1)!! = 1.
long long double_factorial_odd(int k);

struct FamilyCounts {
    int k = 0;
    std::size_t even = 0;  // distinct isomorphism types in F_{eps+2k}
    std::size_t odd = 0;   // and in F_{eps+2k+1}
    long long expected = 0;
    bool partial = false;
    bool ok() const {
        return !partial && even == static_cast<std::size_t>(expected) && odd == static_cast<std::size_t>(expected);
    }
};

/// Counts non-isomorphic members of F_{eps+2k} and F_{eps+2k+1}, k <= 2.
FamilyCounts family_counts(const Dyadic& eps, int k, const FamilyOptions& options = {});

/// Number of pairwise non-isomorphic members.
std::size_t distinct_members(const ForestFamily& family);

}  // namespace acr
