#pragma once

#include <nlohmann/json.hpp>

#include "mpr/ear.hpp"
#include "mpr/polytope.hpp"
#include "mpr/rank.hpp"
#include "mpr/witness.hpp"

// JSON views of the pipeline results. nlohmann::json keeps object keys
// sorted, and every list here is emitted in canonical order, so dumps are
// byte-stable.

namespace mpr {

using Json = nlohmann::json;

Json edge_list_json(const Graph& g, EdgeSet edges);
Json nodes_json(NodeSet s);
Json to_json(const Graph& g, const Inequality& q);
Json to_json(const Graph& g, const Matching& m);
Json to_json(const Graph& g, const FaceDescriptor& f);
Json to_json(const Graph& g, const RankReport& r);
Json to_json(const Graph& g, const WitnessResult& w);
Json to_json(const Graph& g, const WitnessReport& w);
Json to_json(const EarDecomposition& d);

}  // namespace mpr
