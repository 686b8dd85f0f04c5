#include <sstream>

#include <json.hpp>

#include "reeblab/error.hpp"
#include "reeblab/reeb_graph.hpp"

namespace reeblab {

std::string to_dot(const ReebGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"v" << v << ": idx=" << g.index(v) << " deg=" << g.degree(v)
        << "\"];\n";
  for (auto [a, b] : g.edges()) out << "  v" << a << " -> v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const ReebGraph& g) {
  nlohmann::json j;
  j["dim"] = g.dim();
  j["vertices"] = nlohmann::json::array();
  for (int idx : g.indices()) j["vertices"].push_back({{"index", idx}});
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

ReebGraph reeb_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid Reeb graph JSON: ") + e.what(), e.byte);
  }
  try {
    std::vector<int> indices;
    for (const auto& v : j.at("vertices")) indices.push_back(v.at("index").get<int>());
    std::vector<ReebGraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edge must be a pair");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return ReebGraph(j.at("dim").get<int>(), std::move(indices), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Reeb graph document: ") + e.what());
  }
}

}  // namespace reeblab
