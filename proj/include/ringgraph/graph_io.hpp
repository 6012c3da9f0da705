#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringgraph/graph.hpp"

namespace ringgraph {

// {"n", "loops", "edges", "weights"?, "labels"?}; edges listed once with
// ascending endpoints, everything in vertex order.
nlohmann::json to_json(const LoopGraph& g, const std::vector<std::uint64_t>& weights = {});
nlohmann::json to_json(const WeightedLoopGraph& g);
WeightedLoopGraph weighted_from_json(const nlohmann::json& j);

// Loops are written as self-edges.
std::string to_dot(const LoopGraph& g, const std::vector<std::uint64_t>& weights = {}, const std::string& name = "G");

}  // namespace ringgraph
