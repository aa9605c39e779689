#include "gassoc/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gassoc/errors.hpp"

namespace gassoc {

RootVector RootVector::simple(std::size_t n, std::size_t pos) {
  RootVector v(n);
  v[pos] = 1;
  return v;
}

int RootVector::height() const {
  int h = 0;
  for (int c : coords_) h += c;
  return h;
}

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

std::optional<std::size_t> RootVector::negative_simple_index() const {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (coords_[i] != -1 || at) return std::nullopt;
    at = i;
  }
  return at;
}

RootVector RootVector::operator+(const RootVector& o) const {
  if (o.size() != size()) throw DomainError("root vectors of different rank");
  RootVector r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const { return *this + (-o); }

RootVector RootVector::operator-() const {
  RootVector r(*this);
  for (int& c : r.coords_) c = -c;
  return r;
}

RootVector RootVector::operator*(int k) const {
  RootVector r(*this);
  for (int& c : r.coords_) c *= k;
  return r;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool root_order_less(const RootVector& a, const RootVector& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return b < a;
}

RootVector weyl_reflect(const TreeGraph& graph, Vertex i, const RootVector& v) {
  if (v.size() != graph.size()) throw DomainError("weyl_reflect: vector does not match graph");
  const std::size_t pos = graph.index_of(i);
  // <v, alpha_i^vee> = 2 v_i - sum over neighbours.
  int pairing = 2 * v[pos];
  for (auto w : graph.neighbours(pos)) pairing -= v[w];
  RootVector r(v);
  r[pos] -= pairing;
  return r;
}

std::vector<RootVector> positive_roots(const TreeGraph& graph) {
  require_ade(graph);
  const std::size_t n = graph.size();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = RootVector::simple(n, i);
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const RootVector v = queue.front();
    queue.pop_front();
    for (auto id : graph.vertices()) {
      RootVector w = weyl_reflect(graph, id, v);
      if (w.is_positive() && seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), root_order_less);
  return out;
}

std::vector<RootVector> almost_positive_roots(const TreeGraph& graph) {
  auto out = positive_roots(graph);
  for (std::size_t i = 0; i < graph.size(); ++i) out.push_back(-RootVector::simple(graph.size(), i));
  return out;
}

RootSystem::RootSystem(const TreeGraph& graph)
    : graph_(graph), positive_(positive_roots(graph)), almost_positive_(almost_positive_roots(graph)) {
  for (std::size_t k = 0; k < almost_positive_.size(); ++k) index_[almost_positive_[k]] = k;
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive_root(const RootVector& v) const {
  auto idx = index_of(v);
  return idx && *idx < positive_.size();
}

RootVector restrict_to(const TreeGraph& full, const TreeGraph& sub, const RootVector& v) {
  if (v.size() != full.size()) throw DomainError("restrict_to: vector does not match graph");
  RootVector out(sub.size());
  for (std::size_t p = 0; p < full.size(); ++p) {
    const Vertex id = full.vertex_at(p);
    if (sub.contains(id))
      out[sub.index_of(id)] = v[p];
    else if (v[p] != 0)
      throw DomainError("restrict_to: support leaves the subgraph");
  }
  return out;
}

RootVector extend_from(const TreeGraph& full, const TreeGraph& sub, const RootVector& v) {
  if (v.size() != sub.size()) throw DomainError("extend_from: vector does not match subgraph");
  RootVector out(full.size());
  for (std::size_t p = 0; p < sub.size(); ++p) out[full.index_of(sub.vertex_at(p))] = v[p];
  return out;
}

}  // namespace gassoc
