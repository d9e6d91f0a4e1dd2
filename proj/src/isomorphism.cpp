#include <algorithm>
#include <map>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/graph.hpp"

namespace pcg {

namespace {

// Vertex invariant: own degree followed by the sorted degrees of its neighbours.
// Two vertices can only correspond under an isomorphism if these agree.
std::vector<std::vector<std::size_t>> degree_signatures(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto& sig = out[v];
    sig.push_back(g.degree(v));
    const auto& nbrs = g.neighbors(v);
    for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w)) {
      sig.push_back(g.degree(w));
    }
    std::sort(sig.begin() + 1, sig.end());
  }
  return out;
}

// Matching order: repeatedly take the unordered vertex with the most already
// ordered neighbours (ties: rarest signature class, then highest degree), so
// adjacency constraints bite as early as possible.
std::vector<std::size_t> matching_order(const Graph& g, const std::vector<std::size_t>& class_size) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<std::size_t> placed_neighbours(n, 0);
  std::vector<bool> placed(n, false);
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n) {
        best = v;
        continue;
      }
      const auto key = [&](std::size_t u) {
        return std::tuple(placed_neighbours[u], -static_cast<long>(class_size[u]), g.degree(u));
      };
      if (key(v) > key(best)) best = v;
    }
    placed[best] = true;
    order.push_back(best);
    const auto& nbrs = g.neighbors(best);
    for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w)) {
      ++placed_neighbours[w];
    }
  }
  return order;
}

class Matcher {
 public:
  Matcher(const Graph& lhs, const Graph& rhs) : lhs_(lhs), rhs_(rhs) {}

  std::optional<std::vector<std::size_t>> run() {
    const auto n = lhs_.vertex_count();
    const auto lhs_sig = degree_signatures(lhs_);
    const auto rhs_sig = degree_signatures(rhs_);

    std::map<std::vector<std::size_t>, std::size_t> class_of;
    for (const auto& sig : lhs_sig) class_of.try_emplace(sig, class_of.size());
    std::vector<std::size_t> lhs_class(n);
    std::vector<std::size_t> class_size(class_of.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      lhs_class[v] = class_of.at(lhs_sig[v]);
      ++class_size[lhs_class[v]];
    }
    std::vector<std::size_t> rhs_class(n);
    std::vector<std::size_t> rhs_class_size(class_of.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      const auto it = class_of.find(rhs_sig[v]);
      if (it == class_of.end()) return std::nullopt;
      rhs_class[v] = it->second;
      ++rhs_class_size[it->second];
    }
    if (class_size != rhs_class_size) return std::nullopt;

    candidates_.assign(n, {});
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (lhs_class[v] == rhs_class[w]) candidates_[v].push_back(w);
      }
    }
    std::vector<std::size_t> per_vertex_class_size(n);
    for (std::size_t v = 0; v < n; ++v) per_vertex_class_size[v] = class_size[lhs_class[v]];
    order_ = matching_order(lhs_, per_vertex_class_size);

    image_.assign(n, n);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  bool consistent(std::size_t v, std::size_t w, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const auto u = order_[k];
      if (lhs_.adjacent(v, u) != rhs_.adjacent(w, image_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto v = order_[depth];
    for (auto w : candidates_[v]) {
      if (used_[w] || !consistent(v, w, depth)) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    image_[v] = lhs_.vertex_count();
    return false;
  }

  const Graph& lhs_;
  const Graph& rhs_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& lhs, const Graph& rhs,
                                                         std::size_t size_cap) {
  if (lhs.vertex_count() > size_cap || rhs.vertex_count() > size_cap) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "isomorphism search is capped at " + std::to_string(size_cap) + " vertices");
  }
  if (lhs.vertex_count() != rhs.vertex_count() || lhs.edge_count() != rhs.edge_count()) {
    return std::nullopt;
  }
  return Matcher(lhs, rhs).run();
}

bool are_isomorphic(const Graph& lhs, const Graph& rhs, std::size_t size_cap) {
  return find_isomorphism(lhs, rhs, size_cap).has_value();
}

}  // namespace pcg
