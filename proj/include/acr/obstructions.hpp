#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acr/dyadic.hpp"
#include "acr/graph.hpp"

namespace acr {

enum class ThresholdMode { AtMost, LessThan };

const char* to_string(ThresholdMode mode);

/// Above the threshold: Eρ > alpha for AtMost, Eρ >= alpha for LessThan.
bool exceeds(const Dyadic& value, const Dyadic& alpha, ThresholdMode mode);

struct ObstructionMember {
    std::string canon;
    Graph graph;  // canonical labeling
    Dyadic avg;
    int class_id = 0;
};

/// One local-equivalence class among the members.
struct ObstructionClass {
    int id = 0;
    std::string representative;  // least canonical code in the class
    int order = 0;
    Dyadic avg;
    std::vector<std::string> members;  // canonical codes found, sorted
    bool orbit_truncated = false;
};

/// A fixture graph compared against the computed classes.
struct DiffEntry {
    std::string canon;
    Dyadic avg;
    std::string status;  // "matched", "missing", "extra"
    std::string reason;
};

struct ObstructionReport {
    Dyadic alpha;
    ThresholdMode mode = ThresholdMode::AtMost;
    int n_max = 0;
    std::vector<ObstructionMember> members;  // grouped by class, then canonical code
    std::vector<ObstructionClass> classes;
    /// Every qualifying graph on at most n_max vertices is listed. Graphs above
    /// n_max are not examined; `size_bound` is the proven bound on members.
    bool complete_up_to_n_max = true;
    BigInt size_bound;  // x_{floor(alpha)}(frac(alpha))
    /// Independent re-check: no member has a one-vertex-smaller enumerated graph
    /// above the threshold as a vertex-minor.
    bool post_check_ok = true;
    std::vector<std::string> violations;
    std::vector<DiffEntry> diff;  // against expected graphs, if given
};

struct ObstructionOptions {
    int workers = 1;
    bool post_check = true;
};

/// Vertex-minor-minimal graphs above the threshold among all graphs without
/// isolated vertices on at most n_max <= 8 vertices. Minimality is tested
/// against every elementary reduction (all kinds, every pivot partner).
ObstructionReport obstructions(const Dyadic& alpha, ThresholdMode mode, int n_max,
                               const ObstructionOptions& options = {});

/// Compares the report with expected graphs up to local equivalence. Missing
/// entries carry their exact average cut-rank and the reason they fail.
std::vector<DiffEntry> diff_against(const ObstructionReport& report, const std::vector<Graph>& expected);

/// Graphs with maxρ > k whose every vertex deletion has maxρ <= k, on at most
/// n_max vertices, in canonical labeling.
std::vector<Graph> max_cutrank_obstructions(int k, int n_max, int workers = 1);

/// x_0 = max(2 + floor(-log(1-eps)), 5),
/// x_n = 2^{8n+10} (x_{n-1} + 1 + floor(-log(1 - t))), t = frac(2^{x_{n-1}-1} eps),
/// evaluated exactly. Requires 0 <= eps < 1.
BigInt x_sequence(const Dyadic& eps, int n);

/// floor(-log2(1 - t)) for a dyadic t in [0, 1).
int floor_neg_log2_one_minus(const Dyadic& t);

struct CensusEntry {
    Dyadic value;
    std::string witness;  // canonical code of a smallest graph realizing it
};

/// Distinct Eρ values at most `cap` over all graphs on at most n_max vertices.
std::vector<CensusEntry> value_census(int n_max, const Dyadic& cap, int workers = 1);

/// Least census value strictly above alpha, if any.
std::optional<Dyadic> gap_after(const Dyadic& alpha, int n_max, int workers = 1);

/// Membership in {1 - 2^-k} u {3/2 - 2^-(k+1)} u {3/2 - 3 2^-(k+2)} u {3/2}
/// (k >= 0). Returns the name "1-1/2^k", "3/2-1/2^(k+1)", "3/2-3/2^(k+2)" or
/// "3/2" with k, or nothing.
struct ValueSetMember {
    std::string family;
    int k = 0;
};

std::vector<ValueSetMember> three_halves_membership(const Dyadic& value);

/// The k-th member of a family named as above.
Dyadic three_halves_value(const std::string& family, int k);

}  // namespace acr
