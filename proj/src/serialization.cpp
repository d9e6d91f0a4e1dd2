#include "pcg/serialization.hpp"

#include <sstream>

#include "pcg/error.hpp"

namespace pcg {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) schema_error("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& doc, const char* key) {
  const Json& list = member(doc, key);
  if (!list.is_array()) schema_error(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const auto& item : list) {
    if (!item.is_string()) schema_error(std::string("'") + key + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  schema_error(where + " must be a rational string such as \"7/2\"");
}

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : sorted_label_edges(g)) edges.push_back(Json::array({u, v}));
  return Json{{"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& doc) {
  auto labels = string_list(doc, "labels");
  const Json& edges = member(doc, "edges");
  if (!edges.is_array()) schema_error("'edges' must be an array");
  std::vector<LabelPair> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      schema_error("each edge must be a pair of label strings");
    }
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return new_graph(std::move(labels), pairs);
}

Json tree_to_json(const WeightedTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges()) edges.push_back(Json::array({e.u, e.v, e.weight.to_string()}));
  return Json{{"nodes", tree.nodes()}, {"edges", std::move(edges)}};
}

WeightedTree tree_from_json(const Json& doc) {
  auto nodes = string_list(doc, "nodes");
  const Json& edges = member(doc, "edges");
  if (!edges.is_array()) schema_error("'edges' must be an array");
  std::vector<WeightedEdge> weighted;
  weighted.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
      schema_error("each tree edge must be [node, node, \"weight\"]");
    }
    weighted.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                        rational_from_json(e[2], "edge weight")});
  }
  return WeightedTree(std::move(nodes), std::move(weighted));
}

Json instance_to_json(const PcgInstance& instance) {
  Json doc = tree_to_json(instance.tree());
  doc["d_min"] = instance.d_min().to_string();
  doc["d_max"] = instance.d_max().to_string();
  return doc;
}

PcgInstance instance_from_json(const Json& doc) {
  return PcgInstance(tree_from_json(doc), rational_from_json(member(doc, "d_min"), "d_min"),
                     rational_from_json(member(doc, "d_max"), "d_max"));
}

Json obstruction_to_json(const Obstruction& obstruction) {
  return Json{{"kind", std::string(to_string(obstruction.kind))},
              {"vertices", obstruction.cycle}};
}

Json report_to_json(const Graph& g, const ClassificationReport& report) {
  const auto tri = [](const std::optional<bool>& flag) -> Json {
    return flag ? Json(*flag) : Json(nullptr);
  };
  Json degrees = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) degrees[g.label(v)] = g.degree(v);

  Json holes = Json::array();
  for (const auto& hole : report.hole_inventory) holes.push_back(hole.vertices);

  Json necessary = nullptr;
  if (report.necessary_violated) {
    necessary = Json::array({obstruction_to_json(report.necessary_violated->first),
                             obstruction_to_json(report.necessary_violated->second)});
  }
  return Json{
      {"verdict", std::string(to_string(report.verdict))},
      {"vertex_count", g.vertex_count()},
      {"edge_count", g.edge_count()},
      {"degrees", std::move(degrees)},
      {"sufficient_holds", report.sufficient_holds},
      {"necessary_violated", std::move(necessary)},
      {"obstruction_search_truncated", report.obstruction_search_truncated},
      {"complement_holes",
       Json{{"count", report.hole_inventory.size()},
            {"truncated", report.holes_truncated},
            {"holes", std::move(holes)}}},
      {"class_flags",
       Json{{"G1", tri(report.class_flags.g1)},
            {"G2", tri(report.class_flags.g2)},
            {"G2_shared_holes", tri(report.class_flags.g2_shared_holes)},
            {"G3", tri(report.class_flags.g3)},
            {"G4", tri(report.class_flags.g4)},
            {"notes", report.class_flags.notes}}},
  };
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& label : g.labels()) out << "  " << dot_quote(label) << ";\n";
  for (const auto& [u, v] : sorted_label_edges(g)) {
    out << "  " << dot_quote(u) << " -- " << dot_quote(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_dot(const WeightedTree& tree) {
  std::ostringstream out;
  out << "graph T {\n";
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    out << "  " << dot_quote(tree.label(v));
    if (!tree.is_leaf(v)) out << " [shape=point]";
    out << ";\n";
  }
  for (const auto& e : tree.edges()) {
    out << "  " << dot_quote(e.u) << " -- " << dot_quote(e.v)
        << " [label=" << dot_quote(e.weight.to_string()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pcg
