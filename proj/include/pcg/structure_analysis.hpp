#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

/// Induced cycle on at least four vertices, listed in cycle order.
///
/// Canonical form: rotated so the smallest label comes first, and oriented so
/// the second label is smaller than the last.
struct Hole {
  std::vector<std::string> vertices;
  friend bool operator==(const Hole&, const Hole&) = default;
};

enum class ObstructionKind { Hole, CycleComplement };

std::string_view to_string(ObstructionKind kind);

/// A Hole, or a vertex set inducing the complement of a cycle (n >= 5). For
/// CycleComplement the ordering is the cycle whose complement is induced.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::Hole;
  std::vector<std::string> cycle;
  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

using ObstructionPair = std::pair<Obstruction, Obstruction>;

inline constexpr std::size_t kMaxAnalysisVertices = 64;
inline constexpr std::size_t kDefaultHoleLimit = 10000;
inline constexpr std::size_t kDefaultCycleComplementMax = 10;

struct HoleSearch {
  std::vector<Hole> holes;  // sorted by length, then labels
  bool truncated = false;   // more holes exist beyond `limit`
};

/// Enumerates every hole of `g` with length in [min_length, max_length]
/// (max_length 0 = unbounded), up to `limit`. Throws SizeLimitExceeded above
/// kMaxAnalysisVertices vertices.
HoleSearch find_holes(const Graph& g, std::size_t limit = kDefaultHoleLimit,
                      std::size_t min_length = 4, std::size_t max_length = 0);

struct ObstructionSearch {
  std::vector<Obstruction> obstructions;
  bool truncated = false;
};

/// Vertex sets of size n in [n_min, n_max] whose induced subgraph is the
/// complement of an n-cycle. Such a set is exactly a hole of complement(g).
ObstructionSearch find_cycle_complements(const Graph& g, std::size_t n_min = 5,
                                         std::size_t n_max = kDefaultCycleComplementMax,
                                         std::size_t limit = kDefaultHoleLimit);

/// complement(g) is a forest (so g is a PCG).
bool sufficient_condition(const Graph& g);

struct SearchLimits {
  std::size_t max_holes = kDefaultHoleLimit;
  /// Largest n for induced C_n^c obstructions; 0 means up to the vertex count.
  std::size_t max_cycle_complement = 0;
};

struct NecessarySearch {
  std::optional<ObstructionPair> pair;
  /// Absence of a pair is only conclusive when the search was not truncated.
  bool truncated = false;
};

/// Looks for two obstructions (holes or C_n^c, n >= 5) induced in complement(g)
/// that are vertex-disjoint with no complement edge between them, so together
/// they induce their disjoint union. Deterministic: the first such pair in the
/// sorted obstruction list is returned.
NecessarySearch necessary_condition_violated(const Graph& g, const SearchLimits& limits = {});

enum class Verdict { IsPCG, IsNotPCG, Unknown };

std::string_view to_string(Verdict verdict);

/// Membership signals for the four intermediate classes. nullopt means the
/// hole inventory was truncated and the signal could not be decided.
struct ClassFlags {
  std::optional<bool> g1;  // no hole in the complement
  /// Strict reading: the complement's edges are exactly the union of two holes
  /// that share a vertex, and no disjoint obstruction pair exists.
  std::optional<bool> g2;
  /// Relaxed reading: two holes share a vertex and no disjoint obstruction pair exists.
  std::optional<bool> g2_shared_holes;
  /// Heuristic: two vertex-disjoint holes, at least one edge joining them, and
  /// no other complement edges.
  std::optional<bool> g3;
  std::optional<bool> g4;  // exactly one hole in the complement
  std::vector<std::string> notes;
};

struct ClassificationReport {
  bool sufficient_holds = false;
  std::optional<ObstructionPair> necessary_violated;
  std::vector<Hole> hole_inventory;  // holes of complement(g)
  bool holes_truncated = false;
  bool obstruction_search_truncated = false;
  ClassFlags class_flags;
  Verdict verdict = Verdict::Unknown;
};

/// Runs both conditions and the hole inventory of the complement. Graphs above
/// kMaxAnalysisVertices skip enumeration and report truncation.
ClassificationReport classify(const Graph& g, const SearchLimits& limits = {});

// -- certificate validation -------------------------------------------------

/// Consecutive (and wrap-around) vertices adjacent, no other pair adjacent,
/// length >= 4, no repeated vertex.
bool is_valid_hole(const Graph& g, std::span<const std::string> cycle);

/// Validates an obstruction found inside `host` (the complement of the graph
/// being analysed).
bool is_valid_obstruction(const Graph& host, const Obstruction& obstruction);

/// Re-checks every certificate of a report against the graph it describes.
bool is_valid_report(const Graph& g, const ClassificationReport& report);

}  // namespace pcg
