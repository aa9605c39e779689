#include "gassoc/decorated.hpp"

#include <algorithm>

#include "gassoc/errors.hpp"
#include "gassoc/parallel.hpp"

namespace gassoc {

DecoratedRep::DecoratedRep(Representation plus_part, RootVector minus_part)
    : plus(std::move(plus_part)), minus(std::move(minus_part)) {
  if (minus.size() != plus.quiver().rank()) throw DomainError("decorated rep: decoration does not match quiver");
  if (!minus.is_nonnegative()) throw DomainError("decorated rep: negative decoration dimension");
}

DecoratedRep DecoratedRep::simple_minus(const Quiver& q, Vertex i) {
  return DecoratedRep(Representation::zero(q), RootVector::simple(q.rank(), q.graph().index_of(i)));
}

DecoratedRep DecoratedRep::undecorated(Representation plus_part) {
  RootVector zero(plus_part.quiver().rank());
  return DecoratedRep(std::move(plus_part), std::move(zero));
}

DecoratedRep direct_sum(const DecoratedRep& a, const DecoratedRep& b) {
  return DecoratedRep(direct_sum(a.plus, b.plus), a.minus + b.minus);
}

RootVector sdim(const DecoratedRep& m) { return m.plus.dims() - m.minus; }

DecoratedRep decorated_of_root(const Quiver& q, const RootVector& alpha) {
  if (alpha.size() != q.rank()) throw DomainError("decorated_of_root: vector does not match quiver");
  if (auto i = alpha.negative_simple_index()) return DecoratedRep::simple_minus(q, q.graph().vertex_at(*i));
  if (!RootSystem(q.graph()).is_positive_root(alpha))
    throw DomainError("decorated_of_root: " + alpha.to_string() + " is not an almost positive root");
  return DecoratedRep::undecorated(indecomposable_rep(q, alpha));
}

namespace {

std::size_t graded_hom(const RootVector& a, const RootVector& b) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::size_t>(a[i]) * static_cast<std::size_t>(b[i]);
  return s;
}

}  // namespace

std::size_t e_dim(const DecoratedRep& m, const DecoratedRep& n) {
  if (!(m.quiver() == n.quiver())) throw DomainError("e_dim: quiver mismatch");
  return ext_dim(m.plus, n.plus) + ext_dim(n.plus, m.plus) + graded_hom(m.plus.dims(), n.minus) +
         graded_hom(m.minus, n.plus.dims());
}

std::size_t compatibility_degree(const Quiver& q, const RootVector& alpha, const RootVector& beta) {
  return e_dim(decorated_of_root(q, alpha), decorated_of_root(q, beta));
}

DecoratedRep dualize(const DecoratedRep& m) { return DecoratedRep(dual(m.plus), m.minus); }

DecoratedRep extended_reflect(const DecoratedRep& m, Vertex i) {
  const Quiver& q = m.quiver();
  if (!q.is_admissible(i))
    throw AdmissibilityError("Sigma_" + std::to_string(i) + ": vertex is neither a source nor a sink of " +
                             q.to_string());
  if (!q.is_source(i)) return dualize(extended_reflect(dualize(m), i));

  const std::size_t pi = q.graph().index_of(i);
  const auto di = static_cast<std::size_t>(m.plus.dims()[pi]);
  const std::size_t kernel = di - rank(stacked_map_at(m.plus, i));

  Representation plus = classical_reflect(m.plus, i);
  const Representation ei = Representation::simple(plus.quiver(), i);
  for (int c = 0; c < m.minus[pi]; ++c) plus = direct_sum(plus, ei);
  RootVector minus = m.minus;
  minus[pi] = static_cast<int>(kernel);
  return DecoratedRep(std::move(plus), std::move(minus));
}

RootVector sigma(const TreeGraph& graph, Vertex i, const RootVector& gamma) {
  if (gamma.size() != graph.size()) throw DomainError("sigma: vector does not match graph");
  const std::size_t p = graph.index_of(i);
  RootVector out = gamma;
  int v = -gamma[p];
  for (auto k : graph.neighbours(p)) v += std::max(gamma[k], 0);
  out[p] = v;
  return out;
}

RootVector tau(const TreeGraph& graph, Sign sign, const RootVector& gamma) {
  const auto alt = alternating_orientation(graph);
  RootVector out = gamma;
  for (auto i : sign == Sign::Plus ? alt.plus : alt.minus) out = sigma(graph, i, out);
  return out;
}

DecoratedIsoclass isoclass(const DecoratedRep& m, const IndecomposableCatalog& catalog) {
  return DecoratedIsoclass{catalog.decompose(m.plus), m.minus};
}

CompatibilityTable::CompatibilityTable(const Quiver& q, unsigned jobs) : quiver_(q), roots_(q.graph()) {
  const auto& all = roots_.almost_positive();
  const std::size_t n = all.size();
  const std::size_t np = roots_.num_positive();
  reps_.resize(n);
  parallel_for(n, jobs, [&](std::size_t a) { reps_[a] = decorated_of_root(q, all[a]); });

  // Ext between positive indecomposables; the decoration terms are graded Homs.
  std::vector<std::size_t> ext(np * np, 0);
  parallel_for(np, jobs, [&](std::size_t a) {
    for (std::size_t b = 0; b < np; ++b) ext[a * np + b] = ext_dim(reps_[a].plus, reps_[b].plus);
  });

  degree_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t d = graded_hom(reps_[a].plus.dims(), reps_[b].minus) + graded_hom(reps_[a].minus, reps_[b].plus.dims());
      if (a < np && b < np) d += ext[a * np + b] + ext[b * np + a];
      degree_[a * n + b] = d;
    }
}

std::size_t CompatibilityTable::index(const RootVector& a) const {
  auto idx = roots_.index_of(a);
  if (!idx) throw DomainError("compatibility degree: " + a.to_string() + " is not an almost positive root");
  return *idx;
}

std::size_t CompatibilityTable::degree(const RootVector& a, const RootVector& b) const {
  return degree(index(a), index(b));
}

}  // namespace gassoc
