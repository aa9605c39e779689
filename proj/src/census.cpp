#include "gassoc/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gassoc/errors.hpp"
#include "gassoc/parallel.hpp"

namespace gassoc {

namespace {

void clique_walk(const std::vector<RootBits>& adj, const RootBits& cand, std::size_t size, FVector& f) {
  if (f.size() <= size) f.resize(size + 1, 0);
  ++f[size];
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!cand.test(v)) continue;
    RootBits later = cand & adj[v];
    for (std::size_t u = 0; u <= v; ++u) later.reset(u);
    clique_walk(adj, later, size + 1, f);
  }
}

// All faces of the clique complex, as sorted index sets.
void face_walk(const std::vector<RootBits>& adj, const RootBits& cand, RootIndexSet& cur,
               std::set<RootIndexSet>& out) {
  out.insert(cur);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!cand.test(v)) continue;
    RootBits later = cand & adj[v];
    for (std::size_t u = 0; u <= v; ++u) later.reset(u);
    cur.push_back(v);
    face_walk(adj, later, cur, out);
    cur.pop_back();
  }
}

RootBits positive_self_compatible(const CompatibilityTable& table) {
  RootBits allowed;
  for (std::size_t a = 0; a < table.roots().num_positive(); ++a)
    if (table.compatible(a, a)) allowed.set(a);
  return allowed;
}

std::vector<Vertex> subset_of_mask(const TreeGraph& g, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::size_t p = 0; p < g.size(); ++p)
    if ((mask >> p) & 1U) out.push_back(g.vertex_at(p));
  return out;
}

std::string subset_name(const TreeGraph& g, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (auto v : subset_of_mask(g, mask)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::uint64_t at(const FVector& f, std::size_t k) { return k < f.size() ? f[k] : 0; }

}  // namespace

void require_rank_cap(std::size_t rank, std::size_t cap) {
  if (rank > cap)
    throw ResourceError("rank " + std::to_string(rank) + " exceeds the enumeration cap " + std::to_string(cap) +
                        " (use --large)");
}

FVector count_cliques(const std::vector<RootBits>& adj, const RootBits& allowed) {
  FVector f;
  clique_walk(adj, allowed, 0, f);
  return f;
}

FVector f_plus_vector(const CompatibilityTable& table) {
  return count_cliques(compatibility_graph(table), positive_self_compatible(table));
}

FVector f_plus_vector(const Quiver& q, std::size_t rank_cap) {
  require_rank_cap(q.rank(), rank_cap);
  return f_plus_vector(CompatibilityTable(q));
}

FVector full_f_vector(const Quiver& q, const std::vector<Vertex>& subset, std::size_t rank_cap) {
  for (auto v : subset)
    if (!q.graph().contains(v)) throw DomainError("full_f_vector: vertex " + std::to_string(v) + " not in the quiver");
  require_rank_cap(subset.size(), rank_cap);
  if (subset.empty()) return {1};
  const CompatibilityTable table(q.induced(subset));
  RootBits allowed;
  for (std::size_t a = 0; a < table.size(); ++a)
    if (table.compatible(a, a)) allowed.set(a);
  return count_cliques(compatibility_graph(table), allowed);
}

MoebiusReport moebius_consistency(const Quiver& q, std::size_t rank_cap) {
  const TreeGraph& g = q.graph();
  const std::size_t n = g.size();
  require_rank_cap(n, rank_cap);
  const std::uint64_t subsets = std::uint64_t{1} << n;

  // f(., J) and f+(., J) from independent tables on each induced quiver.
  std::vector<FVector> full(subsets), plus(subsets);
  for (std::uint64_t j = 0; j < subsets; ++j) {
    if (j == 0) {
      full[j] = plus[j] = {1};
      continue;
    }
    const CompatibilityTable table(q.induced(subset_of_mask(g, j)));
    const auto adj = compatibility_graph(table);
    RootBits allowed;
    for (std::size_t a = 0; a < table.size(); ++a)
      if (table.compatible(a, a)) allowed.set(a);
    full[j] = count_cliques(adj, allowed);
    plus[j] = count_cliques(adj, positive_self_compatible(table));
  }

  MoebiusReport report;
  auto card = [](std::uint64_t s) { return static_cast<std::size_t>(__builtin_popcountll(s)); };

  for (std::uint64_t j = 0; j < subsets; ++j)
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t sum = 0;
      for (std::uint64_t kset = j;; kset = (kset - 1) & j) {
        if (card(kset) <= k) sum += at(plus[j & ~kset], k - card(kset));
        if (kset == 0) break;
      }
      ++report.relations;
      if (sum != at(full[j], k))
        report.violations.push_back("relation fails at k=" + std::to_string(k) + ", J=" + subset_name(g, j) +
                                    ": f=" + std::to_string(at(full[j], k)) + ", sum=" + std::to_string(sum));
    }

  // Elements (l, L) with 0 <= l <= n; y <= x iff L in J and k - l = |J - L|.
  auto below = [&](std::size_t l, std::uint64_t lset, std::size_t k, std::uint64_t jset) {
    return (lset & ~jset) == 0 && k >= l && k - l == card(jset & ~lset);
  };
  for (std::uint64_t j = 0; j < subsets; ++j)
    for (std::size_t k = 0; k <= n; ++k) {
      // mu(y, x) for all y <= x, processed from the top of the interval down.
      std::map<std::pair<std::size_t, std::uint64_t>, long> mu;
      std::vector<std::pair<std::size_t, std::uint64_t>> interval;
      for (std::uint64_t lset = j;; lset = (lset - 1) & j) {
        const std::size_t gap = card(j & ~lset);
        if (gap <= k) interval.emplace_back(k - gap, lset);
        if (lset == 0) break;
      }
      std::sort(interval.begin(), interval.end(),
                [&](const auto& a, const auto& b) { return card(a.second) > card(b.second); });
      long recovered = 0;
      for (const auto& y : interval) {
        long m = 0;
        if (y.second == j) {
          m = 1;
        } else {
          for (const auto& z : interval)
            if (z != y && below(y.first, y.second, z.first, z.second)) m -= mu.at(z);
        }
        mu[y] = m;
        const long expected = card(j & ~y.second) % 2 ? -1 : 1;
        if (m != expected)
          report.violations.push_back("Moebius function at J=" + subset_name(g, j) + ", L=" +
                                      subset_name(g, y.second) + " is " + std::to_string(m));
        recovered += m * static_cast<long>(at(full[y.second], y.first));
      }
      ++report.inversions;
      if (recovered != static_cast<long>(at(plus[j], k)))
        report.violations.push_back("inversion fails at k=" + std::to_string(k) + ", J=" + subset_name(g, j));
    }
  return report;
}

InvarianceReport orientation_invariance(const TreeGraph& graph, std::size_t rank_cap, unsigned jobs) {
  require_rank_cap(graph.size(), rank_cap);
  const auto quivers = enumerate_orientations(graph);
  InvarianceReport report;
  report.orientations.resize(quivers.size());
  parallel_for(quivers.size(), jobs, [&](std::size_t k) {
    const CompatibilityTable table(quivers[k]);
    report.orientations[k] = {quivers[k], f_plus_vector(table), enumerate_clusters(table).size()};
  });
  report.common = report.orientations.front().f_plus;
  for (const auto& o : report.orientations)
    if (o.f_plus != report.common || o.clusters != report.orientations.front().clusters) report.invariant = false;
  return report;
}

std::uint64_t positive_cluster_count(const DynkinGraph& graph) {
  if (!graph.irreducible())
    throw DomainError("positive_cluster_count: " + graph.name() + " is reducible; the product formula needs an "
                      "irreducible root system");
  const auto& c = graph.components().front();
  mpq_class product = 1;
  for (int e : c.exponents) product *= mpq_class(e + c.coxeter_number - 1, e + 1);
  product.canonicalize();
  if (product.get_den() != 1)
    throw InvariantViolation("positive_cluster_count: product for " + c.name() + " is " + product.get_str() +
                             ", not an integer");
  return product.get_num().get_ui();
}

PositiveComplex positive_complex(const CompatibilityTable& table) {
  const std::size_t np = table.roots().num_positive();
  PositiveComplex out;
  out.vertices = table.roots().positive();
  const auto adj = compatibility_graph(table);
  out.adjacency.resize(np);
  RootBits pos;
  for (std::size_t a = 0; a < np; ++a) pos.set(a);
  for (std::size_t a = 0; a < np; ++a) out.adjacency[a] = adj[a] & pos;
  out.f = count_cliques(out.adjacency, positive_self_compatible(table));
  for (auto& c : positive_clusters(table)) out.facets.push_back(std::move(c));
  return out;
}

bool complex_isomorphic(const Quiver& a, const Quiver& b) {
  if (!(a.graph() == b.graph())) throw DomainError("complex_isomorphic: orientations of different graphs");
  if (a.rank() > 4) throw ResourceError("complex_isomorphic: brute-force isomorphism is capped at rank 4");
  const CompatibilityTable ta(a), tb(b);
  const PositiveComplex ca = positive_complex(ta), cb = positive_complex(tb);
  if (ca.f != cb.f) return false;
  const std::size_t n = ca.vertices.size();

  std::set<RootIndexSet> faces_a, faces_b;
  {
    RootIndexSet cur;
    RootBits all;
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    face_walk(ca.adjacency, all, cur, faces_a);
    face_walk(cb.adjacency, all, cur, faces_b);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> taken(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) {
      for (const auto& face : faces_a) {
        RootIndexSet mapped;
        for (auto x : face) mapped.push_back(image[x]);
        std::sort(mapped.begin(), mapped.end());
        if (!faces_b.count(mapped)) return false;
      }
      return true;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || ca.degree(v) != cb.degree(w)) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u)
        if (ca.has_edge(u, v) != cb.has_edge(image[u], w)) consistent = false;
      if (!consistent) continue;
      image[v] = w;
      taken[w] = true;
      if (extend(v + 1)) return true;
      taken[w] = false;
    }
    image[v] = n;
    return false;
  };
  return extend(0);
}

}  // namespace gassoc
