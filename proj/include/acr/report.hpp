#pragma once

#include <json.hpp>

#include "acr/dyadic.hpp"
#include "acr/families.hpp"
#include "acr/graph.hpp"
#include "acr/local_ops.hpp"
#include "acr/obstructions.hpp"
#include "acr/parameters.hpp"
#include "acr/suites.hpp"

namespace acr {

using Json = nlohmann::ordered_json;

/// {"exact": "p/2^q", "fraction": "p/d", "decimal": "..."}, all strings.
Json to_json(const Dyadic& d);
Json graph_json(const Graph& g);
Json to_json(const ObstructionReport& r);
Json to_json(const std::vector<CensusEntry>& census);
Json to_json(const ForestFamily& f, const std::vector<Tri>& minimal);
Json to_json(const ParamReport& p);
Json to_json(const SuiteResult& r);
Json to_json(const VmResult& r);

}  // namespace acr
