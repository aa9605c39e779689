#include "gassoc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "gassoc/errors.hpp"
#include "gassoc/roots.hpp"

namespace gassoc {

TreeGraph::TreeGraph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw DomainError("graph: duplicate vertex id");

  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (auto [a, b] : edges) {
    if (a == b) throw DomainError("graph: self edge at vertex " + std::to_string(a));
    if (!contains(a) || !contains(b))
      throw DomainError("graph: edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " references an unknown vertex");
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("graph: repeated edge (multigraphs are not trees)");

  adjacency_.assign(vertices_.size(), {});
  for (const auto& e : edges_) {
    const std::size_t ia = index_of(e.first), ib = index_of(e.second);
    const std::size_t ra = find(ia), rb = find(ib);
    if (ra == rb) throw DomainError("graph: edges contain a cycle");
    parent[ra] = rb;
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool TreeGraph::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t TreeGraph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw DomainError("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool TreeGraph::linked(Vertex a, Vertex b) const {
  const auto& adj = adjacency_[index_of(a)];
  return std::binary_search(adj.begin(), adj.end(), index_of(b));
}

std::vector<std::size_t> TreeGraph::component_labels() const {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(size(), unset);
  std::size_t next = 0;
  for (std::size_t start = 0; start < size(); ++start) {
    if (label[start] != unset) continue;
    std::vector<std::size_t> stack{start};
    label[start] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : adjacency_[v])
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> TreeGraph::components() const {
  const auto label = component_labels();
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> out(count);
  for (std::size_t i = 0; i < size(); ++i) out[label[i]].push_back(vertices_[i]);
  return out;
}

TreeGraph TreeGraph::induced(const std::vector<Vertex>& subset) const {
  for (auto v : subset) index_of(v);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const auto& e : edges_) {
    const bool a = std::find(subset.begin(), subset.end(), e.first) != subset.end();
    const bool b = std::find(subset.begin(), subset.end(), e.second) != subset.end();
    if (a && b) kept.emplace_back(e.first, e.second);
  }
  return TreeGraph(subset, kept);
}

char type_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

std::string DynkinComponent::name() const { return std::string(1, type_letter(type)) + std::to_string(rank); }

namespace {

void validate_type_rank(DynkinType type, int rank) {
  const bool ok = (type == DynkinType::A && rank >= 1) || (type == DynkinType::D && rank >= 4) ||
                  (type == DynkinType::E && rank >= 6 && rank <= 8);
  if (!ok)
    throw ClassificationError("no Dynkin diagram of type " + std::string(1, type_letter(type)) +
                              std::to_string(rank));
}

// Edges of the canonical diagram in label space (labels 1..rank).
std::vector<std::pair<int, int>> canonical_edges(DynkinType type, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (type) {
    case DynkinType::A:
      for (int k = 1; k < rank; ++k) e.emplace_back(k, k + 1);
      break;
    case DynkinType::D:
      for (int k = 1; k < rank - 2; ++k) e.emplace_back(k, k + 1);
      e.emplace_back(rank - 2, rank - 1);
      e.emplace_back(rank - 2, rank);
      break;
    case DynkinType::E:
      for (int k = 1; k < rank - 1; ++k) e.emplace_back(k, k + 1);
      e.emplace_back(3, rank);
      break;
  }
  return e;
}

}  // namespace

std::pair<std::vector<int>, int> exponent_table(DynkinType type, int rank) {
  validate_type_rank(type, rank);
  std::vector<int> e;
  int h = 0;
  switch (type) {
    case DynkinType::A:
      for (int k = 1; k <= rank; ++k) e.push_back(k);
      h = rank + 1;
      break;
    case DynkinType::D:
      for (int k = 1; k <= 2 * rank - 3; k += 2) e.push_back(k);
      e.push_back(rank - 1);
      h = 2 * rank - 2;
      break;
    case DynkinType::E:
      if (rank == 6) e = {1, 4, 5, 7, 8, 11}, h = 12;
      if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17}, h = 18;
      if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29}, h = 30;
      break;
  }
  std::sort(e.begin(), e.end());
  return {e, h};
}

DynkinGraph::DynkinGraph(TreeGraph underlying, std::vector<DynkinComponent> components)
    : underlying_(std::move(underlying)), components_(std::move(components)) {
  self_check();
}

void DynkinGraph::self_check() const {
  std::set<Vertex> covered;
  for (const auto& c : components_) {
    validate_type_rank(c.type, c.rank);
    if (static_cast<int>(c.labels.size()) != c.rank)
      throw ClassificationError(c.name() + ": label count does not match rank");
    for (auto v : c.labels)
      if (!covered.insert(v).second) throw ClassificationError("vertex in two components");

    const TreeGraph sub = underlying_.induced(c.labels);
    std::vector<Edge> expect;
    for (auto [a, b] : canonical_edges(c.type, c.rank)) {
      const Vertex x = c.labels[a - 1], y = c.labels[b - 1];
      expect.push_back(Edge{std::min(x, y), std::max(x, y)});
    }
    std::sort(expect.begin(), expect.end());
    if (expect != sub.edges()) throw ClassificationError(c.name() + ": shape does not match type");

    if (static_cast<int>(c.exponents.size()) != c.rank)
      throw ClassificationError(c.name() + ": exponent count does not match rank");
    const long sum = std::accumulate(c.exponents.begin(), c.exponents.end(), 0L);
    if (sum != static_cast<long>(positive_roots(sub).size()))
      throw ClassificationError(c.name() + ": exponents do not sum to the number of positive roots");
  }
  if (covered.size() != underlying_.size() || underlying_.components().size() != components_.size())
    throw ClassificationError("components do not partition the graph");
}

std::string DynkinGraph::name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += '+';
    out += c.name();
  }
  return out;
}

void DynkinGraph::override_exponents(std::size_t component, std::vector<int> exponents) {
  if (component >= components_.size()) throw DomainError("override_exponents: no such component");
  components_[component].exponents = std::move(exponents);
  self_check();
}

DynkinGraph dynkin_graph(DynkinType type, int rank) {
  validate_type_rank(type, rank);
  std::vector<Vertex> vertices(rank);
  std::iota(vertices.begin(), vertices.end(), 1);
  auto [exps, h] = exponent_table(type, rank);
  TreeGraph g(vertices, canonical_edges(type, rank));
  DynkinComponent c{type, rank, vertices, exps, h};
  return DynkinGraph(std::move(g), {c});
}

DynkinGraph dynkin_graph(const std::string& name) {
  std::vector<std::pair<DynkinType, int>> parts;
  std::size_t pos = 0;
  while (pos < name.size()) {
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[pos])));
    DynkinType type;
    if (t == 'A') type = DynkinType::A;
    else if (t == 'D') type = DynkinType::D;
    else if (t == 'E') type = DynkinType::E;
    else throw ClassificationError("cannot parse Dynkin name '" + name + "'");
    std::size_t end = pos + 1;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == pos + 1) throw ClassificationError("cannot parse Dynkin name '" + name + "'");
    parts.emplace_back(type, std::stoi(name.substr(pos + 1, end - pos - 1)));
    pos = end;
    if (pos < name.size()) {
      if (name[pos] != '+') throw ClassificationError("cannot parse Dynkin name '" + name + "'");
      ++pos;
      if (pos == name.size()) throw ClassificationError("cannot parse Dynkin name '" + name + "'");
    }
  }
  if (parts.empty()) throw ClassificationError("empty Dynkin name");

  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<DynkinComponent> comps;
  int offset = 0;
  for (auto [type, rank] : parts) {
    validate_type_rank(type, rank);
    DynkinComponent c;
    c.type = type;
    c.rank = rank;
    for (int k = 1; k <= rank; ++k) {
      vertices.push_back(offset + k);
      c.labels.push_back(offset + k);
    }
    for (auto [a, b] : canonical_edges(type, rank)) edges.emplace_back(offset + a, offset + b);
    std::tie(c.exponents, c.coxeter_number) = exponent_table(type, rank);
    comps.push_back(std::move(c));
    offset += rank;
  }
  return DynkinGraph(TreeGraph(vertices, edges), std::move(comps));
}

namespace {

// Walks from `from` into the arm starting at `next`, away from the branch
// vertex; returns ids ordered from the branch outward.
std::vector<Vertex> walk_arm(const TreeGraph& g, std::size_t from, std::size_t next) {
  std::vector<Vertex> arm;
  std::size_t prev = from, cur = next;
  while (true) {
    arm.push_back(g.vertex_at(cur));
    const auto& adj = g.neighbours(cur);
    if (adj.size() > 2) throw UnsupportedGraphError("tree has two branch vertices: not a Dynkin diagram");
    std::size_t nxt = prev;
    for (auto w : adj)
      if (w != prev) nxt = w;
    if (nxt == prev) break;
    prev = cur;
    cur = nxt;
  }
  return arm;
}

DynkinComponent classify_component(const TreeGraph& g, const std::vector<Vertex>& comp) {
  std::vector<std::size_t> branch;
  for (auto v : comp) {
    const std::size_t d = g.degree(v);
    if (d > 3) throw UnsupportedGraphError("vertex of degree > 3: not a Dynkin diagram");
    if (d == 3) branch.push_back(g.index_of(v));
  }
  DynkinComponent c;
  c.rank = static_cast<int>(comp.size());

  if (branch.empty()) {
    c.type = DynkinType::A;
    if (comp.size() == 1) {
      c.labels = comp;
    } else {
      std::size_t start = g.index_of(comp.front());
      for (auto v : comp)
        if (g.degree(v) == 1) {
          start = g.index_of(v);
          break;
        }
      c.labels.push_back(g.vertex_at(start));
      const auto rest = walk_arm(g, start, g.neighbours(start).front());
      c.labels.insert(c.labels.end(), rest.begin(), rest.end());
    }
  } else {
    if (branch.size() > 1) throw UnsupportedGraphError("tree has two branch vertices: not a Dynkin diagram");
    const std::size_t center = branch.front();
    std::vector<std::vector<Vertex>> arms;
    for (auto w : g.neighbours(center)) arms.push_back(walk_arm(g, center, w));
    // Shortest arms first; ties broken by the id of the arm's far end.
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.back() < b.back();
    });
    const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
    const Vertex cv = g.vertex_at(center);
    auto outward_to_center = [](std::vector<Vertex> arm) {
      std::reverse(arm.begin(), arm.end());
      return arm;
    };
    if (p == 1 && q == 1) {
      c.type = DynkinType::D;
      // D4: all arms have length 1; label 1 is the smallest-id leaf.
      std::vector<std::vector<Vertex>> ordered = arms;
      if (r == 1)
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
      else
        std::rotate(ordered.begin(), ordered.begin() + 2, ordered.end());
      c.labels = outward_to_center(ordered[0]);
      c.labels.push_back(cv);
      c.labels.push_back(ordered[1][0]);
      c.labels.push_back(ordered[2][0]);
    } else if (p == 1 && q == 2 && r >= 2 && r <= 4) {
      c.type = DynkinType::E;
      c.labels = outward_to_center(arms[1]);
      c.labels.push_back(cv);
      c.labels.insert(c.labels.end(), arms[2].begin(), arms[2].end());
      c.labels.push_back(arms[0][0]);
    } else {
      throw UnsupportedGraphError("branched tree is not of type D or E");
    }
  }
  std::tie(c.exponents, c.coxeter_number) = exponent_table(c.type, c.rank);
  return c;
}

}  // namespace

void require_ade(const TreeGraph& graph) {
  for (const auto& comp : graph.components()) classify_component(graph, comp);
}

DynkinGraph classify(const TreeGraph& graph) {
  std::vector<DynkinComponent> comps;
  for (const auto& comp : graph.components()) comps.push_back(classify_component(graph, comp));
  return DynkinGraph(graph, std::move(comps));
}

}  // namespace gassoc
