#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

namespace pcg {

struct WeightedEdge {
  std::string u;
  std::string v;
  Rational weight;
};

/// Tree with non-negative exact edge weights. The leaf set is derived: the
/// degree-1 nodes, or the only node of a single-node tree.
class WeightedTree {
 public:
  struct Arc {
    std::size_t to;
    Rational weight;
  };

  /// Throws DuplicateLabel, UnknownEndpoint, NegativeWeight, NotATree (cycles,
  /// self-loops, disconnection).
  WeightedTree(std::vector<std::string> nodes, std::vector<WeightedEdge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::string& label(std::size_t v) const { return nodes_.at(v); }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  const std::vector<Arc>& arcs(std::size_t v) const { return arcs_.at(v); }

  /// Leaf indices in node order.
  const std::vector<std::size_t>& leaves() const noexcept { return leaves_; }
  std::vector<std::string> leaf_labels() const;
  bool is_leaf(std::size_t v) const { return is_leaf_.at(v); }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  /// Sum of all edge weights; every leaf distance is bounded by it.
  Rational total_weight() const;

 private:
  std::vector<std::string> nodes_;
  std::vector<WeightedEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::size_t> leaves_;
  std::vector<bool> is_leaf_;
};

/// A tree together with the closed interval [d_min, d_max].
class PcgInstance {
 public:
  /// Throws InvalidInterval unless 0 <= d_min <= d_max.
  PcgInstance(WeightedTree tree, Rational d_min, Rational d_max);

  const WeightedTree& tree() const noexcept { return tree_; }
  const Rational& d_min() const noexcept { return d_min_; }
  const Rational& d_max() const noexcept { return d_max_; }

  bool in_interval(const Rational& distance) const {
    return d_min_ <= distance && distance <= d_max_;
  }

 private:
  WeightedTree tree_;
  Rational d_min_;
  Rational d_max_;
};

/// Path weight between two nodes (internal nodes accepted). Throws UnknownLabel.
Rational tree_distance(const WeightedTree& tree, const std::string& u, const std::string& v);

/// Distances from one node to every node, by a single traversal.
std::vector<Rational> distances_from(const WeightedTree& tree, std::size_t source);

/// Keys are (smaller label, larger label).
using LeafDistanceMap = std::map<LabelPair, Rational>;

/// Every unordered pair of distinct leaves, one traversal per leaf.
LeafDistanceMap all_leaf_distances(const WeightedTree& tree);

/// The graph on the leaves (node order) with u ~ v iff d_min <= d(u, v) <= d_max.
Graph pcg_realize(const PcgInstance& instance);

/// A leaf pair whose realized adjacency disagrees with a target graph.
struct WitnessMismatch {
  std::string u;
  std::string v;
  Rational distance;
  bool edge_in_target = false;
};

/// First disagreeing pair in leaf order, or nullopt when the instance realizes
/// `target` exactly. Throws LabelMismatch if leaf labels and vertex labels differ.
std::optional<WitnessMismatch> find_witness_mismatch(const PcgInstance& instance,
                                                     const Graph& target);

bool is_witness(const PcgInstance& instance, const Graph& target);

}  // namespace pcg
