#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gassoc {

using Vertex = int;

/// Unordered edge, stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite forest. Vertices are kept sorted by id; all per-vertex vectors in
/// the library (root coordinates, dimension vectors) follow that order.
class TreeGraph {
 public:
  TreeGraph() = default;
  /// Throws DomainError on duplicate ids, dangling or self edges, and cycles.
  TreeGraph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const;
  /// Position of v in vertices(); throws DomainError for unknown ids.
  std::size_t index_of(Vertex v) const;
  Vertex vertex_at(std::size_t idx) const { return vertices_[idx]; }

  /// Neighbour positions of the vertex at position idx, ascending.
  const std::vector<std::size_t>& neighbours(std::size_t idx) const { return adjacency_[idx]; }
  bool linked(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const { return adjacency_[index_of(v)].size(); }

  /// Connected components as ascending vertex-id lists, ordered by smallest id.
  std::vector<std::vector<Vertex>> components() const;
  /// Position of the component containing each vertex (by position).
  std::vector<std::size_t> component_labels() const;

  /// Full subgraph on the given ids.
  TreeGraph induced(const std::vector<Vertex>& subset) const;

  friend bool operator==(const TreeGraph& a, const TreeGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

enum class DynkinType { A, D, E };

char type_letter(DynkinType t);

struct DynkinComponent {
  DynkinType type = DynkinType::A;
  int rank = 0;
  /// Vertex ids in standard label order: position k holds the vertex that
  /// plays the role of label k+1 in the canonical diagram.
  std::vector<Vertex> labels;
  std::vector<int> exponents;
  int coxeter_number = 0;

  std::string name() const;  // e.g. "D4"
};

/// A forest whose components are simply-laced Dynkin diagrams, together with
/// each component's exponents and Coxeter number.
class DynkinGraph {
 public:
  DynkinGraph(TreeGraph underlying, std::vector<DynkinComponent> components);

  const TreeGraph& underlying() const { return underlying_; }
  const std::vector<DynkinComponent>& components() const { return components_; }
  bool irreducible() const { return components_.size() == 1; }
  std::size_t rank() const { return underlying_.size(); }
  std::string name() const;  // components joined by '+'

  /// Replaces one component's exponent table (fault injection for the census
  /// checks). The sum self-check still applies.
  void override_exponents(std::size_t component, std::vector<int> exponents);

 private:
  void self_check() const;

  TreeGraph underlying_;
  std::vector<DynkinComponent> components_;
};

/// Canonical labelled diagram: A_n path 1..n; D_n path 1..n-2 with n-1 and n
/// attached to n-2; E_n path 1..n-1 with n attached to 3.
DynkinGraph dynkin_graph(DynkinType type, int rank);

/// Parses names like "A3", "d4", "E6", or "A1+A2" (labels shifted so the
/// components occupy consecutive ids).
DynkinGraph dynkin_graph(const std::string& name);

/// Recognises the ADE type of every component; throws UnsupportedGraphError
/// for trees that are not Dynkin diagrams.
DynkinGraph classify(const TreeGraph& graph);

/// Throws UnsupportedGraphError unless every component is an ADE diagram.
/// Shape check only; unlike classify() it does not consult root data.
void require_ade(const TreeGraph& graph);

/// Standard exponent table and Coxeter number.
std::pair<std::vector<int>, int> exponent_table(DynkinType type, int rank);

}  // namespace gassoc
