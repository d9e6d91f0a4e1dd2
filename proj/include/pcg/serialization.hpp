#pragma once

#include <string>

#include "json.hpp"

#include "pcg/graph.hpp"
#include "pcg/structure_analysis.hpp"
#include "pcg/weighted_tree.hpp"

namespace pcg {

using Json = nlohmann::ordered_json;

// Graph:    {"labels": [...], "edges": [[u, v], ...]}, edges sorted.
// Tree:     {"nodes": [...], "edges": [[u, v, "w"], ...]}, weights as "N" or "N/D".
// Instance: tree fields plus "d_min" and "d_max".
//
// Readers throw Error(ParseError) on schema violations; structural problems
// (duplicate labels, cycles, ...) surface with their own kinds.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json tree_to_json(const WeightedTree& tree);
WeightedTree tree_from_json(const Json& doc);

Json instance_to_json(const PcgInstance& instance);
PcgInstance instance_from_json(const Json& doc);

Json obstruction_to_json(const Obstruction& obstruction);
Json report_to_json(const Graph& g, const ClassificationReport& report);

/// Parses JSON text; malformed text raises Error(ParseError).
Json parse_json(const std::string& text);

/// Stable text form: two-space indentation and a trailing newline.
std::string dump_json(const Json& doc);

std::string graph_to_dot(const Graph& g);
std::string tree_to_dot(const WeightedTree& tree);

}  // namespace pcg
