#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/weighted_tree.hpp"

namespace pcg {

/// Parameters of the caterpillar witness for a rows x cols grid.
struct GridPctParams {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t leaf_base = 0;     // rows + cols + 1
  std::int64_t spine_weight = 0;  // 4 * (rows + cols + 1)
  std::int64_t d_min = 0;         // 2 * leaf_base + spine_weight - 1
  std::int64_t d_max = 0;         // 2 * leaf_base + spine_weight + 1

  std::size_t diagonal_count() const { return static_cast<std::size_t>(rows + cols - 1); }
};

/// Throws OutOfRange for an empty dimension.
GridPctParams grid_pct_params(GridSpec spec);

struct GridPoint {
  std::size_t x = 0;  // row, 1-based
  std::size_t y = 0;  // column, 1-based
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Anti-diagonals of the grid: sets[i - 1] holds every point with x + y - 1 = i,
/// ordered by row.
struct DiagonalDecomposition {
  std::vector<std::vector<GridPoint>> sets;
};

DiagonalDecomposition diagonal_decomposition(GridSpec spec);

/// x + y - 1; throws OutOfRange outside the grid.
std::size_t diagonal_index(GridSpec spec, std::size_t x, std::size_t y);

/// Pendant weight of grid point (x, y): leaf_base - (-1)^i (y - x) with i its
/// diagonal index. Throws OutOfRange outside the grid.
std::int64_t leaf_weight(std::size_t x, std::size_t y, const GridPctParams& params);

/// "s_i" for the spine node of diagonal i.
std::string spine_label(std::size_t diagonal);

/// Caterpillar whose spine s_1..s_{rows+cols-1} has consecutive edges of
/// weight spine_weight, with each grid vertex hung as a leaf off its diagonal's
/// spine node, bundled with [d_min, d_max]. Leaves carry the grid labels, so
/// the instance can be checked against gen_grid label-for-label.
///
/// Grids with more rows than columns are built on the transpose and relabelled.
PcgInstance construct_grid_pct(GridSpec spec);

/// First leaf pair where the realized graph differs from gen_grid(spec).
std::optional<WitnessMismatch> grid_witness_mismatch(GridSpec spec);

/// True iff the caterpillar instance realizes exactly gen_grid(spec).
bool verify_grid_witness(GridSpec spec);

}  // namespace pcg
