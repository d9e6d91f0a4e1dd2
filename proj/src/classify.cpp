#include <algorithm>
#include <set>

#include "pcg/error.hpp"
#include "pcg/structure_analysis.hpp"

namespace pcg {

namespace {

// Pairwise class signals are skipped beyond this many holes.
constexpr std::size_t kPairwiseHoleCap = 2000;

VertexSet vertex_mask(const Graph& g, const std::vector<std::string>& labels) {
  VertexSet mask(g.vertex_count());
  for (const auto& label : labels) mask.set(g.index_of(label));
  return mask;
}

// Vertex-disjoint, and no complement edge between the two sets: every vertex
// of `a` is adjacent in g to every vertex of `b`.
bool separated(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) return false;
  for (auto v = a.find_first(); v != VertexSet::npos; v = a.find_next(v)) {
    if (!b.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::set<IndexPair> cycle_edges(const Graph& g, const std::vector<std::string>& cycle) {
  std::set<IndexPair> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto u = g.index_of(cycle[i]);
    auto v = g.index_of(cycle[(i + 1) % cycle.size()]);
    if (u > v) std::swap(u, v);
    out.emplace(u, v);
  }
  return out;
}

NecessarySearch search_disjoint_pair(const Graph& g, const HoleSearch& complement_holes,
                                     const SearchLimits& limits) {
  NecessarySearch out;
  const auto n = g.vertex_count();
  const auto cc_max =
      limits.max_cycle_complement == 0 ? n : std::min(limits.max_cycle_complement, n);
  // C_n^c induced in the complement is a hole of g itself.
  const auto complements = find_holes(g, limits.max_holes, 5, cc_max);
  out.truncated = complement_holes.truncated || complements.truncated || cc_max < n;

  std::vector<Obstruction> all;
  all.reserve(complement_holes.holes.size() + complements.holes.size());
  for (const auto& hole : complement_holes.holes) {
    all.push_back({ObstructionKind::Hole, hole.vertices});
  }
  for (const auto& hole : complements.holes) {
    all.push_back({ObstructionKind::CycleComplement, hole.vertices});
  }
  std::stable_sort(all.begin(), all.end(), [](const Obstruction& a, const Obstruction& b) {
    if (a.cycle.size() != b.cycle.size()) return a.cycle.size() < b.cycle.size();
    if (a.kind != b.kind) return a.kind == ObstructionKind::Hole;
    return a.cycle < b.cycle;
  });

  std::vector<VertexSet> masks;
  masks.reserve(all.size());
  for (const auto& o : all) masks.push_back(vertex_mask(g, o.cycle));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (separated(g, masks[i], masks[j])) {
        out.pair = ObstructionPair{all[i], all[j]};
        return out;
      }
    }
  }
  return out;
}

void set_class_flags(const Graph& complement_graph, const HoleSearch& holes,
                     const NecessarySearch& necessary, ClassFlags& flags) {
  flags.notes.push_back(
      "G2 is the strict reading (complement edges are exactly two holes sharing a vertex); "
      "G2_shared_holes is the relaxed reading (two holes share a vertex, no disjoint "
      "obstruction pair)");
  flags.notes.push_back(
      "G3 is a heuristic: two vertex-disjoint holes joined by at least one edge, with no other "
      "complement edges");
  if (holes.truncated) {
    flags.notes.push_back("hole inventory truncated; class signals undecided");
    return;
  }
  const auto& list = holes.holes;
  flags.g1 = list.empty();
  flags.g4 = list.size() == 1;
  if (list.size() < 2) {
    flags.g2 = false;
    flags.g2_shared_holes = false;
    flags.g3 = false;
    return;
  }
  if (list.size() > kPairwiseHoleCap) {
    flags.notes.push_back("more than " + std::to_string(kPairwiseHoleCap) +
                          " holes; pairwise class signals skipped");
    return;
  }

  const Graph& gc = complement_graph;
  std::vector<VertexSet> masks;
  masks.reserve(list.size());
  for (const auto& hole : list) masks.push_back(vertex_mask(gc, hole.vertices));

  VertexSet touched(gc.vertex_count());
  for (std::size_t v = 0; v < gc.vertex_count(); ++v) {
    if (gc.degree(v) > 0) touched.set(v);
  }

  bool shared = false;
  bool strict_union = false;
  bool bridged_disjoint = false;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const bool overlap = masks[i].intersects(masks[j]);
      if (overlap) {
        shared = true;
        if (!strict_union &&
            list[i].vertices.size() + list[j].vertices.size() >= gc.edge_count()) {
          auto edges = cycle_edges(gc, list[i].vertices);
          const auto more = cycle_edges(gc, list[j].vertices);
          edges.insert(more.begin(), more.end());
          strict_union = edges.size() == gc.edge_count();
        }
      } else if (!bridged_disjoint) {
        const VertexSet both = masks[i] | masks[j];
        if (touched.is_subset_of(both)) {
          bool joined = false;
          for (auto v = masks[i].find_first(); v != VertexSet::npos && !joined;
               v = masks[i].find_next(v)) {
            joined = gc.neighbors(v).intersects(masks[j]);
          }
          bridged_disjoint = joined;
        }
      }
    }
  }
  flags.g3 = bridged_disjoint;
  if (necessary.pair) {
    flags.g2 = false;
    flags.g2_shared_holes = false;
  } else if (!shared) {
    flags.g2 = false;
    flags.g2_shared_holes = false;
  } else if (necessary.truncated) {
    flags.notes.push_back("obstruction search truncated; G2 signals undecided");
  } else {
    flags.g2_shared_holes = true;
    flags.g2 = strict_union;
  }
}

}  // namespace

bool sufficient_condition(const Graph& g) { return is_forest(complement(g)); }

NecessarySearch necessary_condition_violated(const Graph& g, const SearchLimits& limits) {
  return search_disjoint_pair(g, find_holes(complement(g), limits.max_holes), limits);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::IsPCG: return "IsPCG";
    case Verdict::IsNotPCG: return "IsNotPCG";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

ClassificationReport classify(const Graph& g, const SearchLimits& limits) {
  ClassificationReport report;
  report.sufficient_holds = sufficient_condition(g);
  if (g.vertex_count() > kMaxAnalysisVertices) {
    report.holes_truncated = true;
    report.obstruction_search_truncated = true;
    report.class_flags.notes.push_back("graph exceeds " + std::to_string(kMaxAnalysisVertices) +
                                       " vertices; enumeration skipped");
    report.verdict = report.sufficient_holds ? Verdict::IsPCG : Verdict::Unknown;
    return report;
  }

  const Graph gc = complement(g);
  const auto holes = find_holes(gc, limits.max_holes);
  const auto necessary = search_disjoint_pair(g, holes, limits);

  report.hole_inventory = holes.holes;
  report.holes_truncated = holes.truncated;
  report.obstruction_search_truncated = necessary.truncated;
  report.necessary_violated = necessary.pair;
  set_class_flags(gc, holes, necessary, report.class_flags);

  if (report.sufficient_holds) {
    report.verdict = Verdict::IsPCG;
  } else if (report.necessary_violated) {
    report.verdict = Verdict::IsNotPCG;
  } else {
    report.verdict = Verdict::Unknown;
  }
  return report;
}

bool is_valid_report(const Graph& g, const ClassificationReport& report) {
  const Graph gc = complement(g);
  for (const auto& hole : report.hole_inventory) {
    if (!is_valid_hole(gc, hole.vertices)) return false;
  }
  if (report.necessary_violated) {
    const auto& [first, second] = *report.necessary_violated;
    if (!is_valid_obstruction(gc, first) || !is_valid_obstruction(gc, second)) return false;
    if (!separated(g, vertex_mask(g, first.cycle), vertex_mask(g, second.cycle))) return false;
  }
  switch (report.verdict) {
    case Verdict::IsPCG:
      return report.sufficient_holds && !report.necessary_violated;
    case Verdict::IsNotPCG:
      return report.necessary_violated.has_value() && !report.sufficient_holds;
    case Verdict::Unknown:
      return !report.sufficient_holds && !report.necessary_violated;
  }
  return false;
}

}  // namespace pcg
