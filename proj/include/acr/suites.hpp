#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acr/dyadic.hpp"
#include "acr/obstructions.hpp"

namespace acr {

struct SuiteOptions {
    std::optional<int> max_n;      // each suite has its own default
    int max_param = 10;
    std::optional<Dyadic> alpha;   // obstructions: default 1
    ThresholdMode mode = ThresholdMode::AtMost;
    std::optional<Dyadic> eps;     // families: default 0, 1/2 and 3/4
    std::optional<int> n;          // families: default 0..5
    std::uint64_t seed = 1;
    std::optional<int> samples;
    int workers = 1;
    std::string fixtures_dir;      // empty: the directory baked in at build time
};

/// One broken check. `actual` is evaluate_quantity(certificate, quantity), so
/// every failure can be replayed from its certificate alone.
struct SuiteFailure {
    std::string check;
    std::string certificate;  // graph6, or "m:<rows>x<cols>:<hex rows>" for a matrix
    std::string quantity;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::vector<SuiteFailure> failures;
    std::size_t indeterminate = 0;
    std::int64_t wall_ms = 0;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool ok() const { return failures.empty() && indeterminate == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws ParameterError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// Recomputes a quantity on a certificate. Quantities: avg, max, nd, mr2, mr3,
/// cd, components, cutrank:S, cutrank_lc:v:S, lc_twice:v, orbit_forests,
/// quotient_code, quotient_order, structure:n, minimal:le|lt:alpha,
/// rows_vs_rank, family_count:eps:n.
std::string evaluate_quantity(const std::string& certificate, const std::string& quantity);

/// Graphs listed one per line as "<graph6> [name]"; '#' starts a comment line.
struct ListedGraph {
    Graph graph;
    std::string name;
};

std::vector<ListedGraph> read_graph_list(const std::string& path);

std::string default_fixtures_dir();

/// Fixture path for an obstruction list, e.g. L_le_1.5.g6, or empty when absent.
std::string obstruction_fixture(const std::string& dir, const Dyadic& alpha, ThresholdMode mode);

}  // namespace acr
