#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gassoc/graph.hpp"

namespace gassoc {

/// Integer vector over the simple roots, indexed by vertex position.
/// Serves as root, dimension vector and signed dimension vector.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : coords_(n, 0) {}
  explicit RootVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  RootVector(std::initializer_list<int> coords) : coords_(coords) {}

  static RootVector simple(std::size_t n, std::size_t pos);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_positive() const { return is_nonnegative() && !is_zero(); }
  /// True iff this is -alpha_i for some i; returns that position.
  std::optional<std::size_t> negative_simple_index() const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  RootVector operator*(int k) const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string to_string() const;  // "(1,1,0)"

 private:
  std::vector<int> coords_;
};

/// The global root order: by height, then lexicographically descending
/// coordinates, so that simple roots appear in vertex order.
bool root_order_less(const RootVector& a, const RootVector& b);

/// Weyl reflection s_i for the simply-laced Cartan matrix of the graph.
RootVector weyl_reflect(const TreeGraph& graph, Vertex i, const RootVector& v);

/// All positive roots in the global root order. Throws UnsupportedGraphError
/// unless every component is an ADE diagram.
std::vector<RootVector> positive_roots(const TreeGraph& graph);

/// Positive roots followed by -alpha_1, ..., -alpha_n.
std::vector<RootVector> almost_positive_roots(const TreeGraph& graph);

/// Cached root data with index lookup.
class RootSystem {
 public:
  explicit RootSystem(const TreeGraph& graph);

  const TreeGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.size(); }
  const std::vector<RootVector>& positive() const { return positive_; }
  /// Positive roots first, then negative simples; indices below refer here.
  const std::vector<RootVector>& almost_positive() const { return almost_positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  std::optional<std::size_t> index_of(const RootVector& v) const;
  bool is_almost_positive(const RootVector& v) const { return index_of(v).has_value(); }
  bool is_positive_root(const RootVector& v) const;

 private:
  TreeGraph graph_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> almost_positive_;
  std::map<RootVector, std::size_t> index_;
};

/// Restricts a vector on the full graph to the positions of `sub`, which must
/// be an induced subgraph. Throws DomainError if the support leaves `sub`.
RootVector restrict_to(const TreeGraph& full, const TreeGraph& sub, const RootVector& v);
/// Extends a vector on `sub` by zeros.
RootVector extend_from(const TreeGraph& full, const TreeGraph& sub, const RootVector& v);

}  // namespace gassoc
