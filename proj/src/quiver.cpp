#include "gassoc/quiver.hpp"

#include <algorithm>

#include "gassoc/errors.hpp"

namespace gassoc {

Quiver::Quiver(TreeGraph graph, const std::vector<Arrow>& arrows) : graph_(std::move(graph)) {
  const auto& edges = graph_.edges();
  if (arrows.size() != edges.size())
    throw DomainError("quiver: expected one arrow per edge (" + std::to_string(edges.size()) + "), got " +
                      std::to_string(arrows.size()));
  std::vector<std::optional<Arrow>> slot(edges.size());
  for (const auto& a : arrows) {
    if (a.source == a.target) throw DomainError("quiver: loop at vertex " + std::to_string(a.source));
    const Edge e{std::min(a.source, a.target), std::max(a.source, a.target)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e))
      throw DomainError("quiver: arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                        " is not an edge of the graph");
    auto& s = slot[static_cast<std::size_t>(it - edges.begin())];
    if (s) throw DomainError("quiver: edge oriented twice");
    s = a;
  }
  for (auto& s : slot) arrows_.push_back(*s);
}

Quiver Quiver::from_mask(const TreeGraph& graph, std::uint64_t mask) {
  std::vector<Arrow> arrows;
  const auto& edges = graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const bool flip = (mask >> k) & 1U;
    arrows.push_back(flip ? Arrow{edges[k].second, edges[k].first} : Arrow{edges[k].first, edges[k].second});
  }
  return Quiver(graph, arrows);
}

std::uint64_t Quiver::mask() const {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].source > arrows_[k].target) m |= std::uint64_t{1} << k;
  return m;
}

std::vector<std::size_t> Quiver::outgoing(Vertex v) const {
  graph_.index_of(v);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].source == v) out.push_back(k);
  return out;
}

std::vector<std::size_t> Quiver::incoming(Vertex v) const {
  graph_.index_of(v);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].target == v) out.push_back(k);
  return out;
}

bool Quiver::is_alternating() const {
  return std::all_of(graph_.vertices().begin(), graph_.vertices().end(),
                     [&](Vertex v) { return is_admissible(v); });
}

std::vector<Vertex> Quiver::sources() const {
  std::vector<Vertex> out;
  for (auto v : graph_.vertices())
    if (is_source(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> Quiver::sinks() const {
  std::vector<Vertex> out;
  for (auto v : graph_.vertices())
    if (is_sink(v)) out.push_back(v);
  return out;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back(Arrow{a.target, a.source});
  return Quiver(graph_, rev);
}

Quiver Quiver::induced(const std::vector<Vertex>& subset) const {
  TreeGraph sub = graph_.induced(subset);
  std::vector<Arrow> kept;
  for (const auto& a : arrows_)
    if (sub.contains(a.source) && sub.contains(a.target)) kept.push_back(a);
  return Quiver(std::move(sub), kept);
}

std::string Quiver::to_string() const {
  std::string out;
  for (const auto& a : arrows_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(a.source) + "->" + std::to_string(a.target);
  }
  // Isolated vertices would otherwise be invisible.
  for (std::size_t p = 0; p < graph_.size(); ++p)
    if (graph_.neighbours(p).empty()) {
      if (!out.empty()) out += ", ";
      out += std::to_string(graph_.vertex_at(p));
    }
  return out;
}

int euler_form(const Quiver& q, const RootVector& d, const RootVector& e) {
  const auto& g = q.graph();
  if (d.size() != g.size() || e.size() != g.size()) throw DomainError("euler_form: vertex-set mismatch");
  int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[g.index_of(a.source)] * e[g.index_of(a.target)];
  return s;
}

Quiver reflect_orientation(const Quiver& q, Vertex i) {
  if (!q.is_admissible(i))
    throw AdmissibilityError("vertex " + std::to_string(i) + " is neither a source nor a sink of " + q.to_string());
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    arrows.push_back(a.source == i || a.target == i ? Arrow{a.target, a.source} : a);
  return Quiver(q.graph(), arrows);
}

AlternatingOrientation alternating_orientation(const TreeGraph& graph) {
  // Components are found in vertex order, so each BFS root is its component's
  // smallest id.
  std::vector<int> colour(graph.size(), -1);
  for (std::size_t root = 0; root < graph.size(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : graph.neighbours(v))
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        }
    }
  }
  AlternatingOrientation out;
  for (std::size_t p = 0; p < graph.size(); ++p)
    (colour[p] == 0 ? out.plus : out.minus).push_back(graph.vertex_at(p));
  std::vector<Arrow> arrows;
  for (const auto& e : graph.edges()) {
    const bool first_plus = colour[graph.index_of(e.first)] == 0;
    arrows.push_back(first_plus ? Arrow{e.first, e.second} : Arrow{e.second, e.first});
  }
  out.quiver = Quiver(graph, arrows);
  return out;
}

std::vector<Quiver> enumerate_orientations(const TreeGraph& graph) {
  const std::size_t m = graph.edges().size();
  if (m >= 32) throw ResourceError("enumerate_orientations: too many edges");
  std::vector<Quiver> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) out.push_back(Quiver::from_mask(graph, mask));
  return out;
}

}  // namespace gassoc
