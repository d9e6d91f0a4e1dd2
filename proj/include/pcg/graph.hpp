#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pcg {

using VertexSet = boost::dynamic_bitset<>;
using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

class GraphBuilder;

/// Simple undirected graph over uniquely labelled vertices.
///
/// Adjacency is a dense symmetric bit relation; every graph this toolkit
/// works with is small (tens of vertices, grids up to a few hundred), and the
/// hole search leans on whole-row set operations. Instances are immutable once
/// built; use GraphBuilder or new_graph to make one.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws ErrorKind::UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  bool adjacent(const std::string& u, const std::string& v) const;

  const VertexSet& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

  /// Edges as (u, v) index pairs with u < v, in row-major order.
  std::vector<IndexPair> edges() const;

  /// Same labels in the same order and the same adjacency.
  friend bool operator==(const Graph& lhs, const Graph& rhs);

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction with the same validation as new_graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t index_of(const std::string& label) const;

  /// Throws SelfLoop or DuplicateEdge.
  GraphBuilder& add_edge(std::size_t u, std::size_t v);
  /// Throws UnknownEndpoint, SelfLoop or DuplicateEdge.
  GraphBuilder& add_edge(const std::string& u, const std::string& v);

  Graph build() &&;

 private:
  Graph graph_;
};

/// Validated construction from labels and label-pair edges.
/// Errors: DuplicateLabel, UnknownEndpoint, SelfLoop, DuplicateEdge, and
/// OutOfRange when |labels| != vertex_count.
Graph new_graph(std::size_t vertex_count, std::vector<std::string> labels,
                std::span<const LabelPair> edges);
Graph new_graph(std::vector<std::string> labels, std::span<const LabelPair> edges);

Graph complement(const Graph& g);

/// Keeps the selected vertices in their original order. Throws UnknownLabel.
Graph induced_subgraph(const Graph& g, std::span<const std::string> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Vertex labels of the two operands must not overlap (DuplicateLabel).
Graph disjoint_union(const Graph& lhs, const Graph& rhs);

/// Label-matched equality, independent of vertex order.
bool same_labelled_graph(const Graph& lhs, const Graph& rhs);

/// Connected components as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

/// True iff the graph has no cycle: |E| = |V| - #components.
bool is_forest(const Graph& g);

/// Edge list as label pairs, each pair ordered and the list sorted lexicographically.
std::vector<LabelPair> sorted_label_edges(const Graph& g);

// -- isomorphism ------------------------------------------------------------

inline constexpr std::size_t kDefaultIsomorphismCap = 32;

/// Backtracking search for an edge-preserving bijection. Returns the image in
/// `rhs` of every vertex of `lhs`. Throws SizeLimitExceeded above `size_cap`.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const Graph& lhs, const Graph& rhs, std::size_t size_cap = kDefaultIsomorphismCap);

bool are_isomorphic(const Graph& lhs, const Graph& rhs,
                    std::size_t size_cap = kDefaultIsomorphismCap);

// -- generators ---------------------------------------------------------------

struct GridSpec {
  std::size_t rows = 1;
  std::size_t cols = 1;
};

/// "u_x,y" for the grid point in row x, column y (both 1-based).
std::string grid_label(std::size_t x, std::size_t y);

/// Rows x cols lattice; u_{x,y} ~ u_{x',y'} iff they differ by one step in
/// exactly one coordinate. Throws OutOfRange for an empty dimension.
Graph gen_grid(GridSpec spec);

/// Vertices are "v1".."vn" for the cycle, complete and empty families.
Graph gen_cycle(std::size_t n);             // n >= 3, else TooSmall
Graph gen_cycle_complement(std::size_t n);  // n >= 4, else TooSmall
Graph gen_complete(std::size_t n);
Graph gen_empty(std::size_t n);

/// The 15-vertex bipartite graph: A = {a1..a5}, B = {b1..b10}, and the
/// neighbourhood of b_j is the j-th 3-subset of A in lexicographic order
/// (b1 = {a1,a2,a3}, b7 = {a2,a3,a4}, b10 = {a3,a4,a5}).
Graph gen_H();
/// gen_H with A completed to a 5-clique.
Graph gen_H1();
/// gen_H with the 5-cycle a1-a2-a3-a4-a5-a1 on A and B completed to a clique.
Graph gen_H2();
/// gen_H1 plus C = {c1..c5} inducing the complement of c1-c2-c3-c4-c5-c1,
/// joined completely to A and B.
Graph gen_H4();

std::vector<std::string> h_part_a();
std::vector<std::string> h_part_b();
std::vector<std::string> h4_part_c();

}  // namespace pcg
