#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gassoc/graph.hpp"
#include "gassoc/roots.hpp"

namespace gassoc {

struct Arrow {
  Vertex source = 0;
  Vertex target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// An orientation of a forest. Arrow k orients graph().edges()[k]; matrices of
/// representations are indexed the same way.
class Quiver {
 public:
  Quiver() = default;
  /// Arrows may be given in any order; each edge must be oriented exactly once.
  Quiver(TreeGraph graph, const std::vector<Arrow>& arrows);

  /// Orientation from a bitmask over edges: bit k clear means edge k points
  /// from its smaller id to its larger id.
  static Quiver from_mask(const TreeGraph& graph, std::uint64_t mask);

  const TreeGraph& graph() const { return graph_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t rank() const { return graph_.size(); }
  std::uint64_t mask() const;

  /// Arrow indices leaving / entering vertex v.
  std::vector<std::size_t> outgoing(Vertex v) const;
  std::vector<std::size_t> incoming(Vertex v) const;

  bool is_source(Vertex v) const { return incoming(v).empty(); }
  bool is_sink(Vertex v) const { return outgoing(v).empty(); }
  bool is_admissible(Vertex v) const { return is_source(v) || is_sink(v); }
  /// Every vertex a source or a sink.
  bool is_alternating() const;
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  Quiver opposite() const;
  /// Full subquiver on the given vertex ids.
  Quiver induced(const std::vector<Vertex>& subset) const;

  /// e.g. "1->2, 3->2"; a single vertex prints as its id.
  std::string to_string() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.graph_ == b.graph_ && a.arrows_ == b.arrows_;
  }

 private:
  TreeGraph graph_;
  std::vector<Arrow> arrows_;
};

/// <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
int euler_form(const Quiver& q, const RootVector& d, const RootVector& e);

/// Reverses every arrow at i; throws AdmissibilityError unless i is a source
/// or a sink.
Quiver reflect_orientation(const Quiver& q, Vertex i);

struct AlternatingOrientation {
  Quiver quiver;
  std::vector<Vertex> plus;   // sources
  std::vector<Vertex> minus;  // sinks
};

/// Bipartite orientation with each component's smallest vertex in I+.
AlternatingOrientation alternating_orientation(const TreeGraph& graph);

/// All 2^|edges| orientations in mask order.
std::vector<Quiver> enumerate_orientations(const TreeGraph& graph);

}  // namespace gassoc
