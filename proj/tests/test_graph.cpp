#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pcg/error.hpp"
#include "pcg/graph.hpp"

using namespace pcg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pcg::Error");
  return ErrorKind::ParseError;
}

std::set<std::string> neighbour_labels(const Graph& g, const std::string& v) {
  std::set<std::string> out;
  const auto& row = g.neighbors(g.index_of(v));
  for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) out.insert(g.label(w));
  return out;
}

std::size_t degree_sum(const Graph& g) {
  std::size_t sum = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
  return sum;
}

}  // namespace

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("new_graph") {
  const std::vector<LabelPair> path{{"a", "b"}, {"b", "c"}};
  const auto g = new_graph(3, {"a", "b", "c"}, path);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent("a", "b"));
  CHECK(g.adjacent("c", "b"));
  CHECK_FALSE(g.adjacent("a", "c"));

  const auto single = new_graph(1, {"a"}, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  const std::vector<LabelPair> loop{{"a", "a"}};
  CHECK(kind_of([&] { new_graph(2, {"a", "b"}, loop); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([&] { new_graph(2, {"a", "a"}, {}); }) == ErrorKind::DuplicateLabel);
  const std::vector<LabelPair> unknown{{"a", "z"}};
  CHECK(kind_of([&] { new_graph(2, {"a", "b"}, unknown); }) == ErrorKind::UnknownEndpoint);
  const std::vector<LabelPair> twice{{"a", "b"}, {"b", "a"}};
  CHECK(kind_of([&] { new_graph(2, {"a", "b"}, twice); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([&] { new_graph(3, {"a", "b"}, {}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("complement") {
  const auto k5 = complement(gen_complete(5));
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 0);
  CHECK(complement(gen_empty(6)) == gen_complete(6));
  CHECK(gen_complete(6).edge_count() == 15);
  CHECK(are_isomorphic(complement(gen_cycle(5)), gen_cycle(5)));
  CHECK(complement(gen_empty(0)).vertex_count() == 0);
}

TEST_CASE("induced_subgraph") {
  const auto c5 = gen_cycle(5);
  const std::vector<std::string> three{"v2", "v3", "v4"};
  const auto path = induced_subgraph(c5, three);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(path.adjacent("v2", "v3"));
  CHECK(path.adjacent("v3", "v4"));
  CHECK_FALSE(path.adjacent("v2", "v4"));

  CHECK(induced_subgraph(c5, std::vector<std::string>{}).vertex_count() == 0);
  const std::vector<std::string> bad{"v1", "nope"};
  CHECK(kind_of([&] { induced_subgraph(c5, bad); }) == ErrorKind::UnknownLabel);

  auto part = h_part_a();
  const auto part_b = h_part_b();
  part.insert(part.end(), part_b.begin(), part_b.end());
  CHECK(are_isomorphic(induced_subgraph(gen_H4(), part), gen_H1()));
}

TEST_CASE("complement and induced subgraph properties on random graphs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 14)(rng);
    const auto g = oracle::random_graph(rng, n, 0.4);
    CHECK(complement(complement(g)) == g);
    CHECK(2 * g.edge_count() == degree_sum(g));
    CHECK(g.edge_count() + complement(g).edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2);

    VertexSet subset(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (rng() % 2) subset.set(v);
    }
    CHECK(induced_subgraph(complement(g), subset) == complement(induced_subgraph(g, subset)));
  }
}

TEST_CASE("gen_grid") {
  const auto path = gen_grid({1, 4});
  CHECK(path.vertex_count() == 4);
  CHECK(path.edge_count() == 3);
  CHECK(path.adjacent("u_1,1", "u_1,2"));

  const auto square = gen_grid({3, 3});
  CHECK(square.vertex_count() == 9);
  CHECK(square.edge_count() == 12);

  const auto ladder = gen_grid({2, 3});
  CHECK(ladder.vertex_count() == 6);
  CHECK(ladder.edge_count() == 7);

  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t l = 1; l <= 6; ++l) {
      const auto g = gen_grid({k, l});
      CHECK(g.edge_count() == k * (l - 1) + l * (k - 1));
      // Adjacency is exactly one unit step in one coordinate.
      for (std::size_t x = 1; x <= k; ++x) {
        for (std::size_t y = 1; y <= l; ++y) {
          for (std::size_t x2 = 1; x2 <= k; ++x2) {
            for (std::size_t y2 = 1; y2 <= l; ++y2) {
              const auto dx = x > x2 ? x - x2 : x2 - x;
              const auto dy = y > y2 ? y - y2 : y2 - y;
              const bool expected = (dx == 0 && dy == 1) || (dx == 1 && dy == 0);
              if (g.adjacent(grid_label(x, y), grid_label(x2, y2)) != expected) {
                FAIL("grid adjacency mismatch at " << grid_label(x, y) << " "
                                                    << grid_label(x2, y2));
              }
            }
          }
        }
      }
    }
  }
  CHECK(kind_of([] { gen_grid({0, 3}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("cycle families") {
  const auto c4 = gen_cycle(4);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  CHECK(are_isomorphic(gen_cycle_complement(5), gen_cycle(5)));
  const auto c6c = gen_cycle_complement(6);
  CHECK(c6c.edge_count() == 9);
  for (std::size_t v = 0; v < 6; ++v) CHECK(c6c.degree(v) == 3);
  CHECK(gen_cycle_complement(7) == complement(gen_cycle(7)));

  CHECK(kind_of([] { gen_cycle(2); }) == ErrorKind::TooSmall);
  CHECK(kind_of([] { gen_cycle_complement(3); }) == ErrorKind::TooSmall);
  CHECK(gen_complete(7).edge_count() == 21);
  CHECK(gen_empty(3).edge_count() == 0);
}

TEST_CASE("gen_H structure") {
  const auto h = gen_H();
  CHECK(h.vertex_count() == 15);
  CHECK(h.edge_count() == 30);
  for (const auto& a : h_part_a()) CHECK(h.degree(h.index_of(a)) == 6);
  for (const auto& b : h_part_b()) CHECK(h.degree(h.index_of(b)) == 3);

  // A and B independent.
  for (const auto& part : {h_part_a(), h_part_b()}) {
    for (const auto& u : part) {
      for (const auto& v : part) {
        if (u != v) CHECK_FALSE(h.adjacent(u, v));
      }
    }
  }

  // Every 3-subset of A is the neighbourhood of exactly one b.
  std::set<std::set<std::string>> hoods;
  for (const auto& b : h_part_b()) hoods.insert(neighbour_labels(h, b));
  CHECK(hoods.size() == 10);
  const auto a = h_part_a();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) {
        CHECK(hoods.count({a[i], a[j], a[k]}) == 1);
      }
    }
  }
  CHECK(neighbour_labels(h, "b7") == std::set<std::string>{"a2", "a3", "a4"});
  CHECK(neighbour_labels(h, "b10") == std::set<std::string>{"a3", "a4", "a5"});
}

TEST_CASE("H1, H2, H4 edge counts") {
  CHECK(gen_H1().edge_count() == 40);
  const auto h2 = gen_H2();
  CHECK(h2.edge_count() == 80);
  CHECK(h2.adjacent("a1", "a2"));
  CHECK(h2.adjacent("a5", "a1"));
  CHECK_FALSE(h2.adjacent("a1", "a3"));
  CHECK(h2.adjacent("b1", "b10"));

  const auto h4 = gen_H4();
  CHECK(h4.vertex_count() == 20);
  CHECK(h4.edge_count() == 120);
  CHECK_FALSE(h4.adjacent("c1", "c2"));
  CHECK(h4.adjacent("c1", "c3"));
  CHECK(h4.adjacent("b4", "c5"));
  CHECK(are_isomorphic(induced_subgraph(h4, h4_part_c()), gen_cycle_complement(5)));
}

TEST_CASE("connected components and forests") {
  const std::vector<LabelPair> edges{{"a", "b"}, {"c", "d"}, {"d", "e"}};
  const auto g = new_graph({"a", "b", "c", "d", "e", "f"}, edges);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1});
  CHECK(comps[1] == std::vector<std::size_t>{2, 3, 4});
  CHECK(comps[2] == std::vector<std::size_t>{5});
  CHECK(is_forest(g));
  CHECK_FALSE(is_forest(gen_cycle(3)));
  CHECK(is_forest(gen_empty(0)));
}

TEST_CASE("disjoint union and label-matched equality") {
  const auto u = disjoint_union(gen_cycle(4), gen_grid({1, 2}));
  CHECK(u.vertex_count() == 6);
  CHECK(u.edge_count() == 5);
  CHECK(kind_of([] { disjoint_union(gen_cycle(4), gen_cycle(5)); }) == ErrorKind::DuplicateLabel);

  const std::vector<LabelPair> e1{{"a", "b"}};
  const std::vector<LabelPair> e2{{"b", "a"}};
  const auto x = new_graph({"a", "b", "c"}, e1);
  const auto y = new_graph({"c", "b", "a"}, e2);
  CHECK_FALSE(x == y);
  CHECK(same_labelled_graph(x, y));
  CHECK_FALSE(same_labelled_graph(x, new_graph({"a", "b", "c"}, {})));
}

TEST_SUITE_END();
