#include "ringgraph/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ringgraph {

nlohmann::json to_json(const LoopGraph& g, const std::vector<std::uint64_t>& weights) {
  nlohmann::json j;
  j["n"] = g.size();
  auto loops = nlohmann::json::array();
  auto edges = nlohmann::json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.has_loop(u)) loops.push_back(u);
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  j["loops"] = std::move(loops);
  j["edges"] = std::move(edges);
  if (!weights.empty()) j["weights"] = weights;
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

nlohmann::json to_json(const WeightedLoopGraph& g) { return to_json(g.graph, g.weights); }

WeightedLoopGraph weighted_from_json(const nlohmann::json& j) {
  WeightedLoopGraph out;
  out.graph = LoopGraph(j.at("n").get<std::size_t>());
  for (const auto& u : j.at("loops")) out.graph.connect(u.get<std::size_t>(), u.get<std::size_t>());
  for (const auto& e : j.at("edges")) out.graph.connect(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  if (j.contains("weights")) out.weights = j["weights"].get<std::vector<std::uint64_t>>();
  if (j.contains("labels")) out.graph.set_labels(j["labels"].get<std::vector<std::string>>());
  return out;
}

std::string to_dot(const LoopGraph& g, const std::vector<std::uint64_t>& weights, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    out << "  " << u;
    std::string label;
    if (!g.labels().empty()) label = g.labels()[u];
    else if (!weights.empty()) label = "w=" + std::to_string(weights[u]);
    if (!label.empty()) out << " [label=\"" << label << "\"]";
    out << ";\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u; v < g.size(); ++v) {
      if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ringgraph
