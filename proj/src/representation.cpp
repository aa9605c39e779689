#include "gassoc/representation.hpp"

#include <queue>
#include <set>

#include "gassoc/errors.hpp"

namespace gassoc {

Representation::Representation(Quiver quiver, RootVector dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const auto& g = quiver_.graph();
  if (dims_.size() != g.size()) throw DomainError("representation: dimension vector does not match quiver");
  if (!dims_.is_nonnegative()) throw DomainError("representation: negative dimension");
  if (maps_.size() != quiver_.arrows().size()) throw DomainError("representation: one matrix per arrow required");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& a = quiver_.arrows()[k];
    const auto rows = static_cast<std::size_t>(dims_[g.index_of(a.target)]);
    const auto cols = static_cast<std::size_t>(dims_[g.index_of(a.source)]);
    if (maps_[k].rows() != rows || maps_[k].cols() != cols)
      throw DomainError("representation: matrix shape mismatch on arrow " + std::to_string(a.source) + "->" +
                        std::to_string(a.target));
  }
}

Representation Representation::zero(const Quiver& q) {
  std::vector<Matrix> maps(q.arrows().size());
  return Representation(q, RootVector(q.rank()), std::move(maps));
}

Representation Representation::simple(const Quiver& q, Vertex i) {
  RootVector d = RootVector::simple(q.rank(), q.graph().index_of(i));
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(a.target == i ? 1 : 0, a.source == i ? 1 : 0);
  return Representation(q, d, std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) throw DomainError("direct_sum: quiver mismatch");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(Matrix::block_diag(a.map(k), b.map(k)));
  return Representation(a.quiver(), a.dims() + b.dims(), std::move(maps));
}

Representation dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Representation(m.quiver().opposite(), m.dims(), std::move(maps));
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw DomainError("hom_dim: quiver mismatch");
  const Quiver& q = m.quiver();
  const auto& g = q.graph();
  const std::size_t nv = g.size();

  // Unknown f_p is a (n_p x m_p) block, row-major, at offset[p].
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t p = 0; p < nv; ++p)
    offset[p + 1] = offset[p] + static_cast<std::size_t>(n.dims()[p]) * static_cast<std::size_t>(m.dims()[p]);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return 0;

  std::size_t equations = 0;
  for (const auto& a : q.arrows())
    equations += static_cast<std::size_t>(n.dims()[g.index_of(a.target)]) *
                 static_cast<std::size_t>(m.dims()[g.index_of(a.source)]);

  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    const std::size_t i = g.index_of(a.source), j = g.index_of(a.target);
    const auto mi = static_cast<std::size_t>(m.dims()[i]), mj = static_cast<std::size_t>(m.dims()[j]);
    const auto ni = static_cast<std::size_t>(n.dims()[i]), nj = static_cast<std::size_t>(n.dims()[j]);
    const Matrix& ma = m.map(k);
    const Matrix& na = n.map(k);
    // (f_j M_a - N_a f_i)[r, c] = 0
    for (std::size_t r = 0; r < nj; ++r)
      for (std::size_t c = 0; c < mi; ++c, ++row) {
        for (std::size_t s = 0; s < mj; ++s) sys(row, offset[j] + r * mj + s) += ma(s, c);
        for (std::size_t t = 0; t < ni; ++t) sys(row, offset[i] + t * mi + c) -= na(r, t);
      }
  }
  return unknowns - rank(std::move(sys));
}

std::size_t ext_dim(const Representation& m, const Representation& n) {
  const std::size_t h = hom_dim(m, n);
  const long e = static_cast<long>(h) - euler_form(m.quiver(), m.dims(), n.dims());
  if (e < 0) throw InvariantViolation("ext_dim: negative value from the Euler identity");
  return static_cast<std::size_t>(e);
}

Matrix stacked_map_at(const Representation& m, Vertex i) {
  const Quiver& q = m.quiver();
  const auto di = static_cast<std::size_t>(m.dim_at(i));
  if (q.is_source(i)) {
    std::vector<Matrix> blocks;
    for (auto k : q.outgoing(i)) blocks.push_back(m.map(k));
    return Matrix::vstack(blocks, di);
  }
  if (q.is_sink(i)) {
    std::vector<Matrix> blocks;
    for (auto k : q.incoming(i)) blocks.push_back(m.map(k));
    return Matrix::hstack(blocks, di);
  }
  throw AdmissibilityError("vertex " + std::to_string(i) + " is neither a source nor a sink");
}

Representation classical_reflect(const Representation& m, Vertex i) {
  const Quiver& q = m.quiver();
  const auto& g = q.graph();
  Quiver reflected = reflect_orientation(q, i);
  RootVector dims = m.dims();
  std::vector<Matrix> maps = m.maps();
  const std::size_t pi = g.index_of(i);

  if (q.is_source(i)) {
    // New space at i is Coker(M_i -> sum_j M_j); the reversed arrows are the
    // column blocks of a row basis of the left nullspace.
    const Matrix projection = left_nullspace(stacked_map_at(m, i));
    dims[pi] = static_cast<int>(projection.rows());
    std::size_t c0 = 0;
    for (auto k : q.outgoing(i)) {
      const auto dj = static_cast<std::size_t>(m.dim_at(q.arrows()[k].target));
      maps[k] = projection.col_block(c0, dj);
      c0 += dj;
    }
  } else {
    // New space at i is Ker(sum_j M_j -> M_i); reversed arrows are row blocks
    // of the nullspace basis.
    const Matrix inclusion = nullspace(stacked_map_at(m, i));
    dims[pi] = static_cast<int>(inclusion.cols());
    std::size_t r0 = 0;
    for (auto k : q.incoming(i)) {
      const auto dj = static_cast<std::size_t>(m.dim_at(q.arrows()[k].source));
      maps[k] = inclusion.row_block(r0, dj);
      r0 += dj;
    }
  }
  return Representation(std::move(reflected), std::move(dims), std::move(maps));
}

Representation indecomposable_rep(const Quiver& q, const RootVector& alpha) {
  const auto& g = q.graph();
  const RootSystem roots(g);
  if (!roots.is_positive_root(alpha)) throw DomainError("indecomposable_rep: " + alpha.to_string() + " is not a positive root");

  const auto label = g.component_labels();
  std::size_t comp = 0;
  for (std::size_t p = 0; p < g.size(); ++p)
    if (alpha[p] != 0) comp = label[p];

  std::vector<Vertex> path;
  Quiver cur = q;
  RootVector a = alpha;
  constexpr int max_steps = 100000;
  for (int step = 0;; ++step) {
    if (step == max_steps) throw InvariantViolation("indecomposable_rep: sink reflection did not terminate");
    Vertex sink = 0;
    bool found = false;
    for (std::size_t p = 0; p < g.size() && !found; ++p)
      if (label[p] == comp && cur.is_sink(g.vertex_at(p))) {
        sink = g.vertex_at(p);
        found = true;
      }
    if (!found) throw InvariantViolation("indecomposable_rep: component without a sink");
    if (a == RootVector::simple(g.size(), g.index_of(sink))) {
      path.push_back(sink);
      break;
    }
    a = weyl_reflect(g, sink, a);
    if (!a.is_positive()) throw InvariantViolation("indecomposable_rep: root turned negative before reaching a simple");
    cur = reflect_orientation(cur, sink);
    path.push_back(sink);
  }

  Representation m = Representation::simple(cur, path.back());
  for (std::size_t k = path.size() - 1; k-- > 0;) m = classical_reflect(m, path[k]);

  if (!(m.quiver() == q) || !(m.dims() == alpha))
    throw InvariantViolation("indecomposable_rep: pull-back landed on the wrong quiver or dimension");
  if (hom_dim(m, m) != 1) throw InvariantViolation("indecomposable_rep: endomorphism ring is not one-dimensional");
  return m;
}

IndecomposableCatalog::IndecomposableCatalog(const Quiver& q) : quiver_(q), roots_(q.graph()) {
  for (const auto& alpha : roots_.positive()) reps_.push_back(indecomposable_rep(q, alpha));
  const std::size_t n = reps_.size();
  hom_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) hom_[a * n + b] = a == b ? 1 : hom_dim(reps_[a], reps_[b]);

  // Kahn's algorithm on a -> b whenever Hom(M_a, M_b) != 0, smallest index first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && hom(a, b) != 0) ++indegree[b];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t b = 0; b < n; ++b)
    if (indegree[b] == 0) ready.push(b);
  while (!ready.empty()) {
    const std::size_t a = ready.top();
    ready.pop();
    order_.push_back(a);
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && hom(a, b) != 0 && --indegree[b] == 0) ready.push(b);
  }
  if (order_.size() != n) throw InvariantViolation("Hom relation among indecomposables has a cycle");
}

const Representation& IndecomposableCatalog::rep(const RootVector& alpha) const {
  auto idx = roots_.index_of(alpha);
  if (!idx || *idx >= reps_.size()) throw DomainError("catalog: " + alpha.to_string() + " is not a positive root");
  return reps_[*idx];
}

RootMultiset IndecomposableCatalog::decompose(const Representation& m) const {
  if (!(m.quiver() == quiver_)) throw DomainError("decompose: quiver mismatch");
  const std::size_t n = reps_.size();
  std::vector<long> mult(n, 0);
  RootVector total(quiver_.rank());
  RootMultiset out;
  if (m.is_zero()) return out;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t b = order_[pos];
    long value = static_cast<long>(hom_dim(m, reps_[b]));
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const std::size_t a = order_[prev];
      value -= mult[a] * static_cast<long>(hom(a, b));
    }
    if (value < 0) throw InvariantViolation("decompose: negative multiplicity");
    mult[b] = value;
    if (value > 0) {
      out[roots_.positive()[b]] = static_cast<int>(value);
      total = total + roots_.positive()[b] * static_cast<int>(value);
    }
  }
  if (!(total == m.dims())) throw InvariantViolation("decompose: multiplicities do not add up to the dimension vector");
  return out;
}

RootMultiset decompose(const Representation& m) {
  if (m.is_zero()) return {};
  return IndecomposableCatalog(m.quiver()).decompose(m);
}

}  // namespace gassoc
