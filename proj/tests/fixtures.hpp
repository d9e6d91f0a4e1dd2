#pragma once

#include <vector>

#include "pcg/graph.hpp"
#include "pcg/weighted_tree.hpp"

namespace fixtures {

// Seven leaves u1..u7 around three internal nodes: n1 holds u1 (4), u2 (9),
// u3 (2); n2 holds u4 (1); n3 holds u5 (3), u6 (5), u7 (7); the internal path
// n1 - n2 - n3 has unit weights.
inline pcg::WeightedTree worked_example_tree() {
  using pcg::Rational;
  return pcg::WeightedTree(
      {"n1", "n2", "n3", "u1", "u2", "u3", "u4", "u5", "u6", "u7"},
      {
          {"n1", "n2", Rational(1)},
          {"n1", "u1", Rational(4)},
          {"n1", "u2", Rational(9)},
          {"n1", "u3", Rational(2)},
          {"n2", "n3", Rational(1)},
          {"n2", "u4", Rational(1)},
          {"n3", "u5", Rational(3)},
          {"n3", "u6", Rational(5)},
          {"n3", "u7", Rational(7)},
      });
}

inline std::vector<pcg::LabelPair> worked_example_edges() {
  return {{"u1", "u2"}, {"u1", "u5"}, {"u1", "u6"}, {"u1", "u7"}, {"u2", "u3"}, {"u2", "u4"},
          {"u3", "u6"}, {"u3", "u7"}, {"u4", "u7"}, {"u5", "u7"}, {"u6", "u7"}};
}

inline pcg::Graph worked_example_graph() {
  return pcg::new_graph({"u1", "u2", "u3", "u4", "u5", "u6", "u7"}, worked_example_edges());
}

inline pcg::PcgInstance worked_example_instance() {
  return pcg::PcgInstance(worked_example_tree(), pcg::Rational(9), pcg::Rational(13));
}

}  // namespace fixtures
