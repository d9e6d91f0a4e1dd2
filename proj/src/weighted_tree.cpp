#include "pcg/weighted_tree.hpp"

#include <utility>

#include "pcg/error.hpp"

namespace pcg {

WeightedTree::WeightedTree(std::vector<std::string> nodes, std::vector<WeightedEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.empty()) throw Error(ErrorKind::NotATree, "a tree needs at least one node");
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate node label '" + nodes_[i] + "'");
    }
  }
  arcs_.assign(nodes_.size(), {});
  for (const auto& e : edges_) {
    const auto u = find(e.u);
    const auto v = find(e.v);
    if (!u || !v) {
      throw Error(ErrorKind::UnknownEndpoint,
                  "edge endpoint '" + (u ? e.v : e.u) + "' is not a node");
    }
    if (*u == *v) throw Error(ErrorKind::NotATree, "self-loop on '" + e.u + "'");
    if (e.weight.is_negative()) {
      throw Error(ErrorKind::NegativeWeight,
                  "edge '" + e.u + "'-'" + e.v + "' has negative weight " + e.weight.to_string());
    }
    arcs_[*u].push_back({*v, e.weight});
    arcs_[*v].push_back({*u, e.weight});
  }
  if (edges_.size() + 1 != nodes_.size()) {
    throw Error(ErrorKind::NotATree, std::to_string(nodes_.size()) + " nodes need " +
                                         std::to_string(nodes_.size() - 1) + " edges, got " +
                                         std::to_string(edges_.size()));
  }
  // With |E| = |V| - 1, connectivity is equivalent to acyclicity.
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& arc : arcs_[v]) {
      if (!seen[arc.to]) {
        seen[arc.to] = true;
        ++reached;
        stack.push_back(arc.to);
      }
    }
  }
  if (reached != nodes_.size()) {
    throw Error(ErrorKind::NotATree, "edges do not connect all nodes");
  }

  is_leaf_.assign(nodes_.size(), false);
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (arcs_[v].size() == 1 || nodes_.size() == 1) {
      is_leaf_[v] = true;
      leaves_.push_back(v);
    }
  }
}

std::vector<std::string> WeightedTree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (auto v : leaves_) out.push_back(nodes_[v]);
  return out;
}

std::optional<std::size_t> WeightedTree::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedTree::index_of(const std::string& label) const {
  const auto found = find(label);
  if (!found) throw Error(ErrorKind::UnknownLabel, "unknown tree node '" + label + "'");
  return *found;
}

Rational WeightedTree::total_weight() const {
  Rational sum;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

PcgInstance::PcgInstance(WeightedTree tree, Rational d_min, Rational d_max)
    : tree_(std::move(tree)), d_min_(d_min), d_max_(d_max) {
  if (d_min_.is_negative()) {
    throw Error(ErrorKind::InvalidInterval, "d_min " + d_min_.to_string() + " is negative");
  }
  if (d_max_ < d_min_) {
    throw Error(ErrorKind::InvalidInterval,
                "d_max " + d_max_.to_string() + " is below d_min " + d_min_.to_string());
  }
}

std::vector<Rational> distances_from(const WeightedTree& tree, std::size_t source) {
  std::vector<Rational> dist(tree.node_count());
  std::vector<bool> seen(tree.node_count(), false);
  std::vector<std::size_t> stack{source};
  seen.at(source) = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& arc : tree.arcs(v)) {
      if (seen[arc.to]) continue;
      seen[arc.to] = true;
      dist[arc.to] = dist[v] + arc.weight;
      stack.push_back(arc.to);
    }
  }
  return dist;
}

Rational tree_distance(const WeightedTree& tree, const std::string& u, const std::string& v) {
  const auto from = tree.index_of(u);
  const auto to = tree.index_of(v);
  return distances_from(tree, from)[to];
}

LeafDistanceMap all_leaf_distances(const WeightedTree& tree) {
  LeafDistanceMap out;
  const auto& leaves = tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto dist = distances_from(tree, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const auto& a = tree.label(leaves[i]);
      const auto& b = tree.label(leaves[j]);
      out.emplace(a < b ? LabelPair{a, b} : LabelPair{b, a}, dist[leaves[j]]);
    }
  }
  return out;
}

Graph pcg_realize(const PcgInstance& instance) {
  const auto& tree = instance.tree();
  const auto& leaves = tree.leaves();
  GraphBuilder builder(tree.leaf_labels());
  if (leaves.size() < 2) return std::move(builder).build();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto dist = distances_from(tree, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (instance.in_interval(dist[leaves[j]])) builder.add_edge(i, j);
    }
  }
  return std::move(builder).build();
}

std::optional<WitnessMismatch> find_witness_mismatch(const PcgInstance& instance,
                                                     const Graph& target) {
  const auto& tree = instance.tree();
  const auto& leaves = tree.leaves();
  if (leaves.size() != target.vertex_count()) {
    throw Error(ErrorKind::LabelMismatch,
                "tree has " + std::to_string(leaves.size()) + " leaves but graph has " +
                    std::to_string(target.vertex_count()) + " vertices");
  }
  std::vector<std::size_t> vertex_of(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto found = target.find(tree.label(leaves[i]));
    if (!found) {
      throw Error(ErrorKind::LabelMismatch,
                  "leaf '" + tree.label(leaves[i]) + "' is not a vertex of the graph");
    }
    vertex_of[i] = *found;
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto dist = distances_from(tree, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const bool realized = instance.in_interval(dist[leaves[j]]);
      const bool wanted = target.adjacent(vertex_of[i], vertex_of[j]);
      if (realized != wanted) {
        return WitnessMismatch{tree.label(leaves[i]), tree.label(leaves[j]), dist[leaves[j]],
                               wanted};
      }
    }
  }
  return std::nullopt;
}

bool is_witness(const PcgInstance& instance, const Graph& target) {
  return !find_witness_mismatch(instance, target).has_value();
}

}  // namespace pcg
