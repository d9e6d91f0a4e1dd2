#include <algorithm>
#include <unordered_set>

#include "pcg/error.hpp"
#include "pcg/structure_analysis.hpp"

namespace pcg {

namespace {

// Depth-first search over induced paths s = p0, p1, ..., ph. Every path vertex
// after s is larger than s, so each cycle is found from its smallest vertex;
// requiring p1 < (closing vertex) discards the mirrored traversal.
class HoleEnumerator {
 public:
  HoleEnumerator(const Graph& g, std::size_t stop_after, std::size_t min_length,
                 std::size_t max_length)
      : g_(g), stop_after_(stop_after), min_length_(min_length), max_length_(max_length) {}

  std::vector<std::vector<std::size_t>> run() {
    const auto n = g_.vertex_count();
    for (std::size_t s = 0; s < n && !done(); ++s) {
      start_ = s;
      allowed_ = VertexSet(n);
      for (std::size_t v = s + 1; v < n; ++v) allowed_.set(v);
      if (g_.degree(s) < 2) continue;
      const VertexSet firsts = g_.neighbors(s) & allowed_;
      for (auto p1 = firsts.find_first(); p1 != VertexSet::npos && !done();
           p1 = firsts.find_next(p1)) {
        path_.assign({s, p1});
        VertexSet forbidden(n);
        forbidden.set(s);
        extend(forbidden);
      }
    }
    return std::move(found_);
  }

 private:
  bool done() const { return found_.size() >= stop_after_; }

  // `forbidden` holds s and the closed neighbourhoods of p1..p_{h-1}.
  void extend(const VertexSet& forbidden) {
    const auto head = path_.back();
    const std::size_t closing_length = path_.size() + 1;
    VertexSet candidates = g_.neighbors(head) & allowed_;
    candidates -= forbidden;
    const bool may_grow = max_length_ == 0 || closing_length + 1 <= max_length_;
    VertexSet next_forbidden;
    if (may_grow) {
      next_forbidden = forbidden;
      next_forbidden |= g_.neighbors(head);
      next_forbidden.set(head);
    }
    for (auto w = candidates.find_first(); w != VertexSet::npos && !done();
         w = candidates.find_next(w)) {
      if (g_.adjacent(w, start_)) {
        const bool long_enough = closing_length >= 4 && closing_length >= min_length_;
        const bool short_enough = max_length_ == 0 || closing_length <= max_length_;
        if (long_enough && short_enough && path_[1] < w) {
          auto cycle = path_;
          cycle.push_back(w);
          found_.push_back(std::move(cycle));
        }
      } else if (may_grow) {
        path_.push_back(w);
        extend(next_forbidden);
        path_.pop_back();
      }
    }
  }

  const Graph& g_;
  std::size_t stop_after_;
  std::size_t min_length_;
  std::size_t max_length_;
  std::size_t start_ = 0;
  VertexSet allowed_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<std::string> canonical_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  std::vector<std::string> labels;
  labels.reserve(cycle.size());
  for (auto v : cycle) labels.push_back(g.label(v));
  const auto first = std::min_element(labels.begin(), labels.end());
  std::rotate(labels.begin(), first, labels.end());
  if (labels.size() > 2 && labels.back() < labels[1]) {
    std::reverse(labels.begin() + 1, labels.end());
  }
  return labels;
}

bool cycle_order_less(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

void require_analysable(const Graph& g) {
  if (g.vertex_count() > kMaxAnalysisVertices) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "structure analysis is capped at " + std::to_string(kMaxAnalysisVertices) +
                    " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

std::optional<std::vector<std::size_t>> resolve_cycle(const Graph& g,
                                                      std::span<const std::string> cycle) {
  std::vector<std::size_t> idx;
  idx.reserve(cycle.size());
  std::unordered_set<std::size_t> seen;
  for (const auto& label : cycle) {
    const auto v = g.find(label);
    if (!v || !seen.insert(*v).second) return std::nullopt;
    idx.push_back(*v);
  }
  return idx;
}

// Adjacency on `cycle` must equal `consecutive` (hole) or its negation
// (complement of a cycle) for every pair.
bool matches_cycle_pattern(const Graph& g, const std::vector<std::size_t>& cycle,
                           bool complemented) {
  const auto n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (g.adjacent(cycle[i], cycle[j]) != (consecutive != complemented)) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(ObstructionKind kind) {
  return kind == ObstructionKind::Hole ? "Hole" : "CycleComplement";
}

HoleSearch find_holes(const Graph& g, std::size_t limit, std::size_t min_length,
                      std::size_t max_length) {
  require_analysable(g);
  HoleSearch out;
  // One hole past the limit tells a complete result of exactly `limit` holes
  // apart from a cut-off one.
  auto cycles = HoleEnumerator(g, limit + 1, min_length, max_length).run();
  if (cycles.size() > limit) {
    out.truncated = true;
    cycles.resize(limit);
  }
  out.holes.reserve(cycles.size());
  for (const auto& cycle : cycles) out.holes.push_back(Hole{canonical_cycle(g, cycle)});
  std::sort(out.holes.begin(), out.holes.end(), [](const Hole& a, const Hole& b) {
    return cycle_order_less(a.vertices, b.vertices);
  });
  return out;
}

ObstructionSearch find_cycle_complements(const Graph& g, std::size_t n_min, std::size_t n_max,
                                         std::size_t limit) {
  require_analysable(g);
  ObstructionSearch out;
  const auto lower = std::max<std::size_t>(n_min, 5);
  if (n_max < lower) return out;
  const auto found = find_holes(complement(g), limit, lower, n_max);
  out.truncated = found.truncated;
  for (const auto& hole : found.holes) {
    out.obstructions.push_back({ObstructionKind::CycleComplement, hole.vertices});
  }
  return out;
}

bool is_valid_hole(const Graph& g, std::span<const std::string> cycle) {
  if (cycle.size() < 4) return false;
  const auto idx = resolve_cycle(g, cycle);
  return idx && matches_cycle_pattern(g, *idx, false);
}

bool is_valid_obstruction(const Graph& host, const Obstruction& obstruction) {
  if (obstruction.kind == ObstructionKind::Hole) return is_valid_hole(host, obstruction.cycle);
  if (obstruction.cycle.size() < 5) return false;
  const auto idx = resolve_cycle(host, obstruction.cycle);
  return idx && matches_cycle_pattern(host, *idx, true);
}

}  // namespace pcg
