#include "gassoc/clusters.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "gassoc/errors.hpp"

namespace gassoc {

namespace {

void bron_kerbosch(const std::vector<RootBits>& adj, std::size_t n, RootIndexSet& current, RootBits candidates,
                   RootBits excluded, std::vector<RootIndexSet>& out) {
  if (candidates.none() && excluded.none()) {
    out.push_back(current);
    return;
  }
  const RootBits pool = candidates | excluded;
  std::size_t pivot = n, best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!pool.test(u)) continue;
    const std::size_t c = (candidates & adj[u]).count();
    if (pivot == n || c > best) pivot = u, best = c;
  }
  const RootBits branch = candidates & ~adj[pivot];
  for (std::size_t v = 0; v < n; ++v) {
    if (!branch.test(v)) continue;
    current.push_back(v);
    bron_kerbosch(adj, n, current, candidates & adj[v], excluded & adj[v], out);
    current.pop_back();
    candidates.reset(v);
    excluded.set(v);
  }
}

std::vector<RootIndexSet> maximal_cliques(const std::vector<RootBits>& adj, const RootBits& allowed) {
  std::vector<RootIndexSet> out;
  RootIndexSet current;
  bron_kerbosch(adj, adj.size(), current, allowed, RootBits{}, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix root_matrix(const CompatibilityTable& table, const RootIndexSet& set) {
  const std::size_t n = table.rank();
  Matrix m(n, set.size());
  for (std::size_t c = 0; c < set.size(); ++c) {
    const RootVector& r = table.roots().almost_positive()[set[c]];
    for (std::size_t i = 0; i < n; ++i) m(i, c) = r[i];
  }
  return m;
}

}  // namespace

std::vector<RootBits> compatibility_graph(const CompatibilityTable& table) {
  const std::size_t n = table.size();
  if (n > RootBits().size()) throw ResourceError("compatibility graph: too many roots");
  std::vector<RootBits> adj(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && table.compatible(a, b)) adj[a].set(b);
  return adj;
}

bool is_compatible_set(const CompatibilityTable& table, const RootIndexSet& set) {
  for (auto a : set)
    for (auto b : set)
      if (!table.compatible(a, b)) return false;
  return true;
}

std::vector<Vertex> negative_support(const CompatibilityTable& table, const RootIndexSet& set) {
  std::vector<Vertex> out;
  for (auto a : set)
    if (auto i = table.roots().almost_positive()[a].negative_simple_index())
      out.push_back(table.quiver().graph().vertex_at(*i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootIndexSet> enumerate_clusters(const CompatibilityTable& table) {
  const auto adj = compatibility_graph(table);
  RootBits allowed;
  // A root with positive self-degree is in no compatible set.
  for (std::size_t a = 0; a < table.size(); ++a)
    if (table.compatible(a, a)) allowed.set(a);
  return maximal_cliques(adj, allowed);
}

std::vector<RootIndexSet> positive_clusters(const CompatibilityTable& table) {
  std::vector<RootIndexSet> out;
  for (auto& c : enumerate_clusters(table))
    if (negative_support(table, c).empty()) out.push_back(std::move(c));
  return out;
}

std::vector<RootIndexSet> maximal_ext_free_sets(const Quiver& q) {
  const RootSystem roots(q.graph());
  const auto& pos = roots.positive();
  const std::size_t n = pos.size();
  if (n > RootBits().size()) throw ResourceError("maximal_ext_free_sets: too many roots");
  std::vector<Representation> reps;
  for (const auto& a : pos) reps.push_back(indecomposable_rep(q, a));
  std::vector<std::size_t> ext(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ext[a * n + b] = ext_dim(reps[a], reps[b]);
  std::vector<RootBits> adj(n);
  RootBits allowed;
  for (std::size_t a = 0; a < n; ++a) {
    if (ext[a * n + a] == 0) allowed.set(a);
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && ext[a * n + b] == 0 && ext[b * n + a] == 0) adj[a].set(b);
  }
  return maximal_cliques(adj, allowed);
}

long root_matrix_determinant(const CompatibilityTable& table, const RootIndexSet& set) {
  if (set.size() != table.rank()) return 0;
  const Rational d = determinant(root_matrix(table, set));
  return d.get_num().get_si();
}

ClusterFan::ClusterFan(const CompatibilityTable& table) : ClusterFan(table, enumerate_clusters(table)) {}

ClusterFan::ClusterFan(const CompatibilityTable& table, std::vector<RootIndexSet> clusters)
    : table_(&table), clusters_(std::move(clusters)) {
  const std::size_t n = table.rank();
  for (const auto& c : clusters_) {
    if (c.size() != n || sgn(determinant(root_matrix(table, c))) == 0) {
      inverses_.emplace_back();
      continue;
    }
    const Matrix m = root_matrix(table, c);
    Matrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Rational> e(n, 0);
      e[col] = 1;
      const auto x = solve(m, e);
      for (std::size_t r = 0; r < n; ++r) inv(r, col) = x[r];
    }
    inverses_.push_back(std::move(inv));
  }
}

ClusterExpansion ClusterFan::expand(const RootVector& gamma) const {
  const std::size_t n = table_->rank();
  if (gamma.size() != n) throw DomainError("cluster_expansion: vector does not match quiver");
  const auto& roots = table_->roots().almost_positive();

  std::optional<std::vector<std::pair<std::size_t, int>>> accepted;
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    const Matrix& inv = inverses_[k];
    if (inv.empty()) continue;
    std::vector<std::pair<std::size_t, int>> terms;
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      Rational m = 0;
      for (std::size_t c = 0; c < n; ++c) m += inv(r, c) * gamma[c];
      if (sgn(m) < 0) ok = false;
      else if (m.get_den() != 1)
        throw InvariantViolation("cluster_expansion: fractional coordinates in cone " + std::to_string(k));
      else if (sgn(m) > 0)
        terms.emplace_back(clusters_[k][r], static_cast<int>(m.get_num().get_si()));
    }
    if (!ok) continue;
    std::sort(terms.begin(), terms.end());
    if (!accepted)
      accepted = std::move(terms);
    else if (*accepted != terms)
      throw InvariantViolation("cluster_expansion: cones disagree on the expansion of " + gamma.to_string());
  }
  if (!accepted) throw InvariantViolation("cluster_expansion: no cluster cone contains " + gamma.to_string());

  ClusterExpansion out{gamma, {}};
  for (auto [idx, m] : *accepted) out.terms.emplace_back(roots[idx], m);
  return out;
}

ClusterExpansion cluster_expansion(const Quiver& q, const RootVector& gamma) {
  const CompatibilityTable table(q);
  return ClusterFan(table).expand(gamma);
}

FanReport verify_fan(const CompatibilityTable& table, std::size_t samples, std::uint64_t seed) {
  FanReport report;
  const ClusterFan fan(table);
  const std::size_t n = table.rank();
  report.clusters = fan.clusters().size();
  for (const auto& c : fan.clusters()) {
    if (c.size() != n) {
      ++report.wrong_size;
      report.counterexamples.push_back("cluster of size " + std::to_string(c.size()));
      continue;
    }
    const long d = root_matrix_determinant(table, c);
    if (d != 1 && d != -1) {
      ++report.non_unimodular;
      report.counterexamples.push_back("cluster with determinant " + std::to_string(d));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-10, 10);
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    RootVector gamma(n);
    for (std::size_t i = 0; i < n; ++i) gamma[i] = coord(rng);
    try {
      const auto e = fan.expand(gamma);
      RootVector sum(n);
      for (const auto& [root, m] : e.terms) sum = sum + root * m;
      if (!(sum == gamma)) throw InvariantViolation("expansion does not sum to target");
    } catch (const InvariantViolation& ex) {
      ++report.failed_samples;
      if (report.counterexamples.size() < 20) report.counterexamples.push_back(gamma.to_string() + ": " + ex.what());
    }
  }
  report.ok = report.wrong_size == 0 && report.non_unimodular == 0 && report.failed_samples == 0;
  return report;
}

}  // namespace gassoc
