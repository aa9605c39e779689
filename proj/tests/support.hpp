#pragma once

#include <doctest.h>

#include <set>
#include <vector>

#include "gassoc/census.hpp"
#include "gassoc/errors.hpp"
#include "gassoc/groupoid.hpp"

namespace testing {

using namespace gassoc;

inline Quiver path_quiver(std::initializer_list<Arrow> arrows, int n) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int v = 1; v <= n; ++v) vs.push_back(v);
  for (const auto& a : arrows) es.emplace_back(a.source, a.target);
  return Quiver(TreeGraph(vs, es), std::vector<Arrow>(arrows));
}

inline const Quiver& a2() {
  static const Quiver q = path_quiver({{1, 2}}, 2);
  return q;
}

inline Quiver alt(const std::string& name) { return alternating_orientation(dynkin_graph(name).underlying()).quiver; }

inline std::vector<Quiver> orientations(const std::string& name) {
  return enumerate_orientations(dynkin_graph(name).underlying());
}

/// Star with three leaves on centre 1, as a bare tree.
inline TreeGraph star3() { return TreeGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}}); }

}  // namespace testing
