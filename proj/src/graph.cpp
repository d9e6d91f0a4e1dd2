#include "pcg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pcg/error.hpp"

namespace pcg {

std::optional<std::size_t> Graph::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const std::string& label) const {
  const auto found = find(label);
  if (!found) throw Error(ErrorKind::UnknownLabel, "unknown vertex '" + label + "'");
  return *found;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
  return adjacent(index_of(u), index_of(v));
}

std::vector<IndexPair> Graph::edges() const {
  std::vector<IndexPair> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos;
         v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool operator==(const Graph& lhs, const Graph& rhs) {
  return lhs.labels_ == rhs.labels_ && lhs.adjacency_ == rhs.adjacency_;
}

GraphBuilder::GraphBuilder(std::vector<std::string> labels) {
  graph_.index_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!graph_.index_.emplace(labels[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate vertex label '" + labels[i] + "'");
    }
  }
  graph_.adjacency_.assign(labels.size(), VertexSet(labels.size()));
  graph_.labels_ = std::move(labels);
}

std::size_t GraphBuilder::index_of(const std::string& label) const {
  const auto found = graph_.find(label);
  if (!found) throw Error(ErrorKind::UnknownEndpoint, "edge endpoint '" + label + "' is not a vertex");
  return *found;
}

GraphBuilder& GraphBuilder::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorKind::UnknownEndpoint, "edge endpoint index out of range");
  }
  if (u == v) {
    throw Error(ErrorKind::SelfLoop, "self-loop on '" + graph_.labels_[u] + "'");
  }
  if (graph_.adjacency_[u].test(v)) {
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge '" + graph_.labels_[u] + "'-'" + graph_.labels_[v] + "'");
  }
  graph_.adjacency_[u].set(v);
  graph_.adjacency_[v].set(u);
  ++graph_.edge_count_;
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(const std::string& u, const std::string& v) {
  return add_edge(index_of(u), index_of(v));
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph new_graph(std::size_t vertex_count, std::vector<std::string> labels,
                std::span<const LabelPair> edges) {
  if (labels.size() != vertex_count) {
    throw Error(ErrorKind::OutOfRange, "vertex count " + std::to_string(vertex_count) +
                                           " does not match " + std::to_string(labels.size()) +
                                           " labels");
  }
  return new_graph(std::move(labels), edges);
}

Graph new_graph(std::vector<std::string> labels, std::span<const LabelPair> edges) {
  GraphBuilder builder(std::move(labels));
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

Graph complement(const Graph& g) {
  GraphBuilder builder(g.labels());
  const auto n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) builder.add_edge(u, v);
    }
  }
  return std::move(builder).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<std::size_t> kept;
  for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v)) {
    kept.push_back(v);
  }
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (auto v : kept) labels.push_back(g.label(v));
  GraphBuilder builder(std::move(labels));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.adjacent(kept[i], kept[j])) builder.add_edge(i, j);
    }
  }
  return std::move(builder).build();
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> vertices) {
  VertexSet selected(g.vertex_count());
  for (const auto& label : vertices) selected.set(g.index_of(label));
  return induced_subgraph(g, selected);
}

Graph disjoint_union(const Graph& lhs, const Graph& rhs) {
  std::vector<std::string> labels = lhs.labels();
  labels.insert(labels.end(), rhs.labels().begin(), rhs.labels().end());
  GraphBuilder builder(std::move(labels));
  for (const auto& [u, v] : lhs.edges()) builder.add_edge(u, v);
  const auto offset = lhs.vertex_count();
  for (const auto& [u, v] : rhs.edges()) builder.add_edge(u + offset, v + offset);
  return std::move(builder).build();
}

bool same_labelled_graph(const Graph& lhs, const Graph& rhs) {
  if (lhs.vertex_count() != rhs.vertex_count() || lhs.edge_count() != rhs.edge_count()) {
    return false;
  }
  std::vector<std::size_t> to_rhs(lhs.vertex_count());
  for (std::size_t v = 0; v < lhs.vertex_count(); ++v) {
    const auto found = rhs.find(lhs.label(v));
    if (!found) return false;
    to_rhs[v] = *found;
  }
  for (const auto& [u, v] : lhs.edges()) {
    if (!rhs.adjacent(to_rhs[u], to_rhs[v])) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> components;
  VertexSet unseen(n);
  unseen.set();
  for (auto root = unseen.find_first(); root != VertexSet::npos; root = unseen.find_first()) {
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack{root};
    unseen.reset(root);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      component.push_back(v);
      const VertexSet fresh = g.neighbors(v) & unseen;
      for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
        unseen.reset(w);
        stack.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

std::vector<LabelPair> sorted_label_edges(const Graph& g) {
  std::vector<LabelPair> out;
  out.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const auto& a = g.label(u);
    const auto& b = g.label(v);
    if (a < b) {
      out.emplace_back(a, b);
    } else {
      out.emplace_back(b, a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcg
