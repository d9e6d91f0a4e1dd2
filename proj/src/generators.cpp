#include <string>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/graph.hpp"

namespace pcg {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t first, std::size_t last) {
  std::vector<std::string> out;
  for (std::size_t i = first; i <= last; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Ten 3-subsets of {0..4} in lexicographic order; b_{j+1} sees kTriples[j].
constexpr std::size_t kTriples[10][3] = {
    {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
    {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
};

enum class PartAShape { Independent, Clique, FiveCycle };

Graph build_h_family(PartAShape shape_a, bool clique_b) {
  auto labels = h_part_a();
  const auto part_b = h_part_b();
  labels.insert(labels.end(), part_b.begin(), part_b.end());
  GraphBuilder builder(std::move(labels));
  for (std::size_t j = 0; j < 10; ++j) {
    for (auto a : kTriples[j]) builder.add_edge(a, 5 + j);
  }
  switch (shape_a) {
    case PartAShape::Independent:
      break;
    case PartAShape::Clique:
      for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) builder.add_edge(a, b);
      }
      break;
    case PartAShape::FiveCycle:
      for (std::size_t a = 0; a < 5; ++a) builder.add_edge(a, (a + 1) % 5);
      break;
  }
  if (clique_b) {
    for (std::size_t i = 5; i < 15; ++i) {
      for (std::size_t j = i + 1; j < 15; ++j) builder.add_edge(i, j);
    }
  }
  return std::move(builder).build();
}

}  // namespace

std::string grid_label(std::size_t x, std::size_t y) {
  return "u_" + std::to_string(x) + "," + std::to_string(y);
}

Graph gen_grid(GridSpec spec) {
  if (spec.rows == 0 || spec.cols == 0) {
    throw Error(ErrorKind::OutOfRange, "grid dimensions must be positive");
  }
  std::vector<std::string> labels;
  labels.reserve(spec.rows * spec.cols);
  for (std::size_t x = 1; x <= spec.rows; ++x) {
    for (std::size_t y = 1; y <= spec.cols; ++y) labels.push_back(grid_label(x, y));
  }
  GraphBuilder builder(std::move(labels));
  const auto at = [&](std::size_t x, std::size_t y) { return (x - 1) * spec.cols + (y - 1); };
  for (std::size_t x = 1; x <= spec.rows; ++x) {
    for (std::size_t y = 1; y <= spec.cols; ++y) {
      if (y < spec.cols) builder.add_edge(at(x, y), at(x, y + 1));
      if (x < spec.rows) builder.add_edge(at(x, y), at(x + 1, y));
    }
  }
  return std::move(builder).build();
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "a cycle needs at least 3 vertices");
  GraphBuilder builder(numbered("v", 1, n));
  for (std::size_t i = 0; i < n; ++i) builder.add_edge(i, (i + 1) % n);
  return std::move(builder).build();
}

Graph gen_cycle_complement(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::TooSmall, "a cycle complement needs at least 4 vertices");
  return complement(gen_cycle(n));
}

Graph gen_complete(std::size_t n) {
  return complement(gen_empty(n));
}

Graph gen_empty(std::size_t n) {
  return GraphBuilder(numbered("v", 1, n)).build();
}

std::vector<std::string> h_part_a() { return numbered("a", 1, 5); }
std::vector<std::string> h_part_b() { return numbered("b", 1, 10); }
std::vector<std::string> h4_part_c() { return numbered("c", 1, 5); }

Graph gen_H() { return build_h_family(PartAShape::Independent, false); }
Graph gen_H1() { return build_h_family(PartAShape::Clique, false); }
Graph gen_H2() { return build_h_family(PartAShape::FiveCycle, true); }

Graph gen_H4() {
  const Graph h1 = gen_H1();
  auto labels = h1.labels();
  const auto part_c = h4_part_c();
  labels.insert(labels.end(), part_c.begin(), part_c.end());
  GraphBuilder builder(std::move(labels));
  for (const auto& [u, v] : h1.edges()) builder.add_edge(u, v);
  // C induces the complement of c1-c2-c3-c4-c5-c1: the pentagram c1-c3-c5-c2-c4.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      const bool cycle_neighbours = (j - i == 1) || (i == 0 && j == 4);
      if (!cycle_neighbours) builder.add_edge(15 + i, 15 + j);
    }
  }
  for (std::size_t v = 0; v < 15; ++v) {
    for (std::size_t c = 15; c < 20; ++c) builder.add_edge(v, c);
  }
  return std::move(builder).build();
}

}  // namespace pcg
