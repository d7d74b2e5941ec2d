#include "tda/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace tda::serialize {

using nlohmann::json;

std::string mapper_json(const MapperGraph& graph, int indent) {
  json nodes = json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back({{"id", n.id},
                     {"interval", n.interval},
                     {"cluster", n.cluster},
                     {"size", n.members.size()},
                     {"members", n.members},
                     {"filter", {{"min", n.filter_min}, {"mean", n.filter_mean}, {"max", n.filter_max}}}});
  }
  json edges = json::array();
  for (const auto& e : graph.edges) edges.push_back({{"source", e.source}, {"target", e.target}, {"weight", e.weight}});
  const json doc = {{"nodes", nodes},
                    {"edges", edges},
                    {"params",
                     {{"filter", graph.params.filter},
                      {"resolution", graph.params.resolution},
                      {"gain", graph.params.gain},
                      {"clustering", graph.params.clustering}}}};
  return doc.dump(indent);
}

std::string mapper_dot(const MapperGraph& graph) {
  std::ostringstream o;
  o << "graph mapper {\n";
  for (const auto& n : graph.nodes)
    o << "  n" << n.id << " [label=\"" << n.id << " (" << n.members.size() << ")\", interval=" << n.interval
      << ", mean=" << n.filter_mean << "];\n";
  for (const auto& e : graph.edges)
    o << "  n" << e.source << " -- n" << e.target << " [label=\"" << e.weight << "\", weight=" << e.weight << "];\n";
  o << "}\n";
  return o.str();
}

std::string band_json(const ConfidenceBand& band, int indent) {
  json doc = {{"kind", band.kind == BandKind::diagram ? "diagram-band" : "landscape-band"},
              {"alpha", band.alpha},
              {"seed", band.seed},
              {"replicates", band.replicates},
              {"method", band.method},
              {"notes", band.notes}};
  if (band.kind == BandKind::diagram) {
    doc["eta"] = band.radius();
  } else {
    doc["eta"] = band.eta;
    doc["center"] = band.center;
  }
  return doc.dump(indent);
}

std::string diagram_json(const PersistenceDiagram& dgm) {
  json arr = json::array();
  for (const auto& p : dgm)
    arr.push_back({{"dim", p.dim}, {"birth", p.birth}, {"death", p.essential() ? json(nullptr) : json(p.death)}});
  return arr.dump();
}

}  // namespace tda::serialize
