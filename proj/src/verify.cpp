#include "gassoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <set>

#include "gassoc/census.hpp"
#include "gassoc/errors.hpp"
#include "gassoc/groupoid.hpp"
#include "gassoc/parallel.hpp"

namespace gassoc {

namespace {

// Lazily built tables shared by all checks on one graph.
class Workspace {
 public:
  explicit Workspace(unsigned jobs) : jobs_(jobs) {}

  const CompatibilityTable& table(const Quiver& q) {
    auto& slot = tables_[q.to_string() + "|" + std::to_string(q.rank())];
    if (!slot) slot = std::make_unique<CompatibilityTable>(q, jobs_);
    return *slot;
  }

  const IndecomposableCatalog& catalog(const Quiver& q) {
    auto& slot = catalogs_[q.to_string() + "|" + std::to_string(q.rank())];
    if (!slot) slot = std::make_unique<IndecomposableCatalog>(q);
    return *slot;
  }

  const std::vector<RootIndexSet>& clusters(const Quiver& q) {
    auto& slot = clusters_[q.to_string() + "|" + std::to_string(q.rank())];
    if (!slot) slot = std::make_unique<std::vector<RootIndexSet>>(enumerate_clusters(table(q)));
    return *slot;
  }

 private:
  unsigned jobs_;
  std::map<std::string, std::unique_ptr<CompatibilityTable>> tables_;
  std::map<std::string, std::unique_ptr<IndecomposableCatalog>> catalogs_;
  std::map<std::string, std::unique_ptr<std::vector<RootIndexSet>>> clusters_;
};

// Accumulates assertion outcomes for one check.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  std::string detail;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

struct Context {
  const VerifyConfig& config;
  std::string graph_name;
  DynkinGraph graph;
  std::vector<Quiver> orientations;
  Workspace& ws;
  std::mt19937_64 rng;
};

std::vector<Vertex> admissible_vertices(const Quiver& q) {
  std::vector<Vertex> out;
  for (auto v : q.graph().vertices())
    if (q.is_admissible(v)) out.push_back(v);
  return out;
}

std::string iso_to_string(const DecoratedIsoclass& iso) {
  std::string out = "{";
  for (const auto& [root, m] : iso.plus) out += root.to_string() + "x" + std::to_string(m) + " ";
  return out + "| minus " + iso.minus.to_string() + "}";
}

DecoratedRep random_sum(const CompatibilityTable& t, std::mt19937_64& rng, std::size_t* picked = nullptr) {
  std::uniform_int_distribution<std::size_t> terms(2, 3), pick(0, t.size() - 1);
  const std::size_t k = terms(rng);
  DecoratedRep m = t.indecomposable(pick(rng));
  for (std::size_t j = 1; j < k; ++j) m = direct_sum(m, t.indecomposable(pick(rng)));
  if (picked) *picked = k;
  return m;
}

// dim M_k * dim V_k = 0 at i and at every neighbour of i.
bool local_hypothesis(const DecoratedRep& m, Vertex i) {
  const auto& g = m.quiver().graph();
  const std::size_t p = g.index_of(i);
  auto clean = [&](std::size_t k) { return m.plus.dims()[k] == 0 || m.minus[k] == 0; };
  if (!clean(p)) return false;
  return std::all_of(g.neighbours(p).begin(), g.neighbours(p).end(), clean);
}

// ---------------------------------------------------------------- rep-linear

void check_euler_identity(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& cat = c.ws.catalog(q);
    const auto& reps = cat.reps();
    t.expect(reps.size() == cat.roots().num_positive(), [&] { return "missing indecomposables over " + q.to_string(); });
    for (std::size_t a = 0; a < reps.size(); ++a) {
      t.expect(hom_dim(reps[a], reps[a]) == 1, [&] { return "End not 1-dimensional"; });
      for (std::size_t b = 0; b < reps.size(); ++b) {
        const long h = static_cast<long>(cat.hom(a, b));
        long e = -1;
        try {
          e = static_cast<long>(ext_dim(reps[a], reps[b]));
        } catch (const InvariantViolation&) {
        }
        t.expect(e >= 0 && h - e == euler_form(q, reps[a].dims(), reps[b].dims()), [&] {
          return q.to_string() + ": hom-ext != Euler form for " + reps[a].dims().to_string() + ", " +
                 reps[b].dims().to_string();
        });
        if (a == b) t.expect(e == 0, [&] { return q.to_string() + ": indecomposable " + reps[a].dims().to_string() + " is not rigid"; });
      }
    }
  }
}

void check_four_term(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& reps = c.ws.catalog(q).reps();
    for (auto i : admissible_vertices(q)) {
      const Representation ei = Representation::simple(q, i);
      for (const auto& m : reps) {
        const Matrix st = stacked_map_at(m, i);
        const std::size_t r = rank(st);
        const std::size_t ker = st.cols() - r, coker = st.rows() - r;
        // Source: 0 -> Hom(E_i,M) -> M_i -> sum M_j -> Ext(E_i,M) -> 0.
        // Sink:   0 -> Ext(M,E_i)^* -> sum M_j -> M_i -> Hom(M,E_i)^* -> 0.
        const bool source = q.is_source(i);
        const std::size_t hom = source ? hom_dim(ei, m) : hom_dim(m, ei);
        const std::size_t ext = source ? ext_dim(ei, m) : ext_dim(m, ei);
        const std::size_t left = source ? hom : ext, right = source ? ext : hom;
        t.expect(left == ker && right == coker, [&] {
          return q.to_string() + ", vertex " + std::to_string(i) + ", M=" + m.dims().to_string() +
                 ": exact sequence dimensions disagree";
        });
        long neighbours = 0;
        for (auto k : source ? q.outgoing(i) : q.incoming(i)) {
          const auto& a = q.arrows()[k];
          neighbours += m.dim_at(a.source == i ? a.target : a.source);
        }
        const long sum = static_cast<long>(hom) - m.dim_at(i) + neighbours - static_cast<long>(ext);
        t.expect(sum == 0, [&] { return q.to_string() + ": four-term sum is " + std::to_string(sum); });
      }
    }
  }
}

void check_reflection_dimensions(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& reps = c.ws.catalog(q).reps();
    for (auto i : admissible_vertices(q)) {
      for (const auto& m : reps) {
        const Representation s = classical_reflect(m, i);
        if (m.dims() == RootVector::simple(q.rank(), q.graph().index_of(i))) {
          t.expect(s.is_zero(), [&] { return "S_i(E_i) is not zero at vertex " + std::to_string(i); });
          continue;
        }
        t.expect(s.dims() == weyl_reflect(q.graph(), i, m.dims()), [&] {
          return q.to_string() + ": dim S_" + std::to_string(i) + "(" + m.dims().to_string() + ") is not s_i of it";
        });
        const Representation ss = classical_reflect(s, i);
        t.expect(ss.quiver() == q && c.ws.catalog(q).decompose(ss) == RootMultiset{{m.dims(), 1}}, [&] {
          return q.to_string() + ": S_i S_i(" + m.dims().to_string() + ") is not isomorphic to it";
        });
      }
    }
  }
}

void check_hom_additivity(Context& c, Tally& t) {
  std::size_t done = 0;
  while (done < c.config.random_sums) {
    for (const auto& q : c.orientations) {
      if (done++ >= c.config.random_sums) break;
      const auto& cat = c.ws.catalog(q);
      const auto& reps = cat.reps();
      std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
      const std::size_t a = pick(c.rng), b = pick(c.rng), p = pick(c.rng);
      const Representation sum = direct_sum(reps[a], reps[b]);
      t.expect(hom_dim(sum, reps[p]) == cat.hom(a, p) + cat.hom(b, p) &&
                   hom_dim(reps[p], sum) == cat.hom(p, a) + cat.hom(p, b) &&
                   ext_dim(sum, reps[p]) == ext_dim(reps[a], reps[p]) + ext_dim(reps[b], reps[p]),
               [&] { return q.to_string() + ": Hom/Ext not additive on " + sum.dims().to_string(); });
      RootMultiset expected{{reps[a].dims(), 1}};
      expected[reps[b].dims()] += 1;
      t.expect(cat.decompose(sum) == expected,
               [&] { return q.to_string() + ": decompose of a random sum is wrong"; });
    }
  }
}

// ----------------------------------------------------------------- decorated

void check_sdim_bijection(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& cat = c.ws.catalog(q);
    std::set<std::pair<RootMultiset, RootVector>> seen;
    for (std::size_t a = 0; a < tab.size(); ++a) {
      const auto& m = tab.indecomposable(a);
      const RootVector& alpha = tab.roots().almost_positive()[a];
      t.expect(sdim(m) == alpha, [&] { return q.to_string() + ": sdim(U_alpha) != alpha for " + alpha.to_string(); });
      const auto iso = isoclass(m, cat);
      t.expect(seen.emplace(iso.plus, iso.minus).second,
               [&] { return q.to_string() + ": two roots give isomorphic decorated representations"; });
    }
  }
}

void check_sdim_reflection(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    for (auto i : admissible_vertices(q))
      for (std::size_t a = 0; a < tab.size(); ++a) {
        const auto& m = tab.indecomposable(a);
        if (!local_hypothesis(m, i)) continue;
        t.expect(sdim(extended_reflect(m, i)) == sigma(q.graph(), i, sdim(m)), [&] {
          return q.to_string() + ", i=" + std::to_string(i) + ": sdim Sigma_i U != sigma_i sdim U for " +
                 sdim(m).to_string();
        });
      }
  }
  std::size_t tested = 0, drawn = 0;
  while (tested < c.config.random_sums && drawn < 50 * c.config.random_sums + 50) {
    for (const auto& q : c.orientations) {
      if (tested >= c.config.random_sums) break;
      ++drawn;
      const auto adm = admissible_vertices(q);
      std::uniform_int_distribution<std::size_t> pick_i(0, adm.size() - 1);
      const Vertex i = adm[pick_i(c.rng)];
      const DecoratedRep m = random_sum(c.ws.table(q), c.rng);
      if (!local_hypothesis(m, i)) continue;
      ++tested;
      t.expect(sdim(extended_reflect(m, i)) == sigma(q.graph(), i, sdim(m)), [&] {
        return q.to_string() + ", i=" + std::to_string(i) + ": random sum with sdim " + sdim(m).to_string() +
               " violates sdim Sigma_i = sigma_i sdim";
      });
    }
  }
  t.detail = std::to_string(tested) + " random sums satisfying the hypothesis";
}

void check_correspondence(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const RootSystem& rs = tab.roots();
    for (auto i : admissible_vertices(q))
      for (std::size_t a = 0; a < tab.size(); ++a) {
        const RootVector& alpha = rs.almost_positive()[a];
        const RootVector image = sdim(extended_reflect(tab.indecomposable(a), i));
        t.expect(image == sigma(q.graph(), i, alpha) && rs.is_almost_positive(image), [&] {
          return q.to_string() + ", i=" + std::to_string(i) + ": sdim Sigma_i U_alpha != sigma_i alpha for " +
                 alpha.to_string();
        });
      }
  }
}

void check_sigma_squared(Context& c, Tally& t) {
  auto one = [&](const Quiver& q, Vertex i, const DecoratedRep& m) {
    const auto& cat = c.ws.catalog(q);
    const DecoratedRep back = extended_reflect(extended_reflect(m, i), i);
    const auto before = isoclass(m, cat);
    const auto after = isoclass(back, cat);
    t.expect(back.quiver() == q && before == after, [&] {
      return q.to_string() + ", i=" + std::to_string(i) + ": Sigma_i^2 moves " + iso_to_string(before) + " to " +
             iso_to_string(after);
    });
  };
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    for (auto i : admissible_vertices(q))
      for (std::size_t a = 0; a < tab.size(); ++a) one(q, i, tab.indecomposable(a));
  }
  std::size_t done = 0;
  while (done < c.config.random_sums)
    for (const auto& q : c.orientations) {
      if (done++ >= c.config.random_sums) break;
      const auto adm = admissible_vertices(q);
      std::uniform_int_distribution<std::size_t> pick_i(0, adm.size() - 1);
      const Vertex i = adm[pick_i(c.rng)];
      one(q, i, random_sum(c.ws.table(q), c.rng));
    }
}

void check_e_invariance(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    for (auto i : admissible_vertices(q)) {
      std::vector<DecoratedRep> reflected(tab.size());
      parallel_for(tab.size(), c.config.jobs,
                   [&](std::size_t a) { reflected[a] = extended_reflect(tab.indecomposable(a), i); });
      std::vector<std::size_t> values(tab.size() * tab.size());
      parallel_for(tab.size(), c.config.jobs, [&](std::size_t a) {
        for (std::size_t b = 0; b < tab.size(); ++b) values[a * tab.size() + b] = e_dim(reflected[a], reflected[b]);
      });
      for (std::size_t a = 0; a < tab.size(); ++a)
        for (std::size_t b = 0; b < tab.size(); ++b)
          t.expect(values[a * tab.size() + b] == tab.degree(a, b), [&] {
            return q.to_string() + ", i=" + std::to_string(i) + ": E(Sigma_i M, Sigma_i N) != E(M, N) for " +
                   tab.roots().almost_positive()[a].to_string() + ", " + tab.roots().almost_positive()[b].to_string();
          });
    }
  }
}

void check_degree_reflection(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& roots = tab.roots().almost_positive();
    for (auto i : admissible_vertices(q)) {
      const auto& reflected = c.ws.table(reflect_orientation(q, i));
      for (std::size_t a = 0; a < tab.size(); ++a)
        for (std::size_t b = 0; b < tab.size(); ++b) {
          const RootVector sa = sigma(q.graph(), i, roots[a]), sb = sigma(q.graph(), i, roots[b]);
          t.expect(reflected.degree(sa, sb) == tab.degree(a, b), [&] {
            return q.to_string() + ", i=" + std::to_string(i) + ": degree changes under sigma_i for " +
                   roots[a].to_string() + ", " + roots[b].to_string();
          });
        }
    }
  }
}

void check_duality(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& op = c.ws.table(q.opposite());
    std::vector<DecoratedRep> duals;
    for (std::size_t a = 0; a < tab.size(); ++a) duals.push_back(dualize(tab.indecomposable(a)));
    for (std::size_t a = 0; a < tab.size(); ++a)
      for (std::size_t b = 0; b < tab.size(); ++b) {
        t.expect(op.degree(a, b) == tab.degree(a, b), [&] {
          return q.to_string() + ": degree differs on the opposite quiver for " +
                 tab.roots().almost_positive()[a].to_string() + ", " + tab.roots().almost_positive()[b].to_string();
        });
        t.expect(e_dim(duals[b], duals[a]) == tab.degree(a, b),
                 [&] { return q.to_string() + ": E(DN, DM) != E(M, N)"; });
      }
  }
}

void check_subsystem(Context& c, Tally& t) {
  const auto& g = c.graph.underlying();
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    for (std::uint64_t j = 1; j + 1 < subsets; ++j) {
      std::vector<Vertex> subset;
      for (std::size_t p = 0; p < g.size(); ++p)
        if ((j >> p) & 1U) subset.push_back(g.vertex_at(p));
      const Quiver sub = q.induced(subset);
      const auto& st = c.ws.table(sub);
      const auto& sroots = st.roots().almost_positive();
      for (std::size_t a = 0; a < st.size(); ++a)
        for (std::size_t b = 0; b < st.size(); ++b) {
          const RootVector fa = extend_from(g, sub.graph(), sroots[a]), fb = extend_from(g, sub.graph(), sroots[b]);
          t.expect(st.degree(a, b) == tab.degree(fa, fb), [&] {
            return q.to_string() + ": degree of " + fa.to_string() + ", " + fb.to_string() +
                   " changes on the subquiver " + sub.to_string();
          });
        }
    }
  }
}

void check_alternating_degree(Context& c, Tally& t) {
  const auto& g = c.graph.underlying();
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& roots = tab.roots().almost_positive();
    for (std::size_t p = 0; p < g.size(); ++p)
      for (std::size_t b = 0; b < tab.size(); ++b) {
        const RootVector neg = -RootVector::simple(g.size(), p);
        t.expect(tab.degree(neg, roots[b]) == static_cast<std::size_t>(std::max(roots[b][p], 0)), [&] {
          return q.to_string() + ": (-alpha_" + std::to_string(g.vertex_at(p)) + " || " + roots[b].to_string() +
                 ") != max coefficient";
        });
      }
  }
  const auto alt = alternating_orientation(g);
  const auto& tab = c.ws.table(alt.quiver);
  const auto& roots = tab.roots().almost_positive();
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t a = 0; a < tab.size(); ++a)
      for (std::size_t b = 0; b < tab.size(); ++b) {
        const RootVector ta = tau(g, s, roots[a]), tb = tau(g, s, roots[b]);
        t.expect(tab.degree(ta, tb) == tab.degree(a, b), [&] {
          return std::string("tau_") + (s == Sign::Plus ? "+" : "-") + " changes the degree of " +
                 roots[a].to_string() + ", " + roots[b].to_string();
        });
      }
}

// -------------------------------------------------------------- clusters-fan

void check_purity(Context& c, Tally& t) {
  std::set<std::size_t> counts;
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& clusters = c.ws.clusters(q);
    counts.insert(clusters.size());
    for (const auto& cl : clusters)
      t.expect(cl.size() == tab.rank(), [&] {
        return q.to_string() + ": maximal compatible set of size " + std::to_string(cl.size());
      });
  }
  t.expect(counts.size() == 1, [&] { return "cluster count depends on the orientation"; });
  t.detail = std::to_string(*counts.begin()) + " clusters per orientation";
}

void check_negative_support(Context& c, Tally& t) {
  const auto& g = c.graph.underlying();
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& clusters = c.ws.clusters(q);
    std::map<std::vector<Vertex>, std::size_t> by_support;
    for (const auto& cl : clusters) ++by_support[negative_support(tab, cl)];
    for (std::uint64_t j = 0; j < subsets; ++j) {
      std::vector<Vertex> neg, rest;
      for (std::size_t p = 0; p < g.size(); ++p) ((j >> p) & 1U ? neg : rest).push_back(g.vertex_at(p));
      const std::size_t expected = rest.empty() ? 1 : positive_clusters(c.ws.table(q.induced(rest))).size();
      const std::size_t got = by_support.count(neg) ? by_support.at(neg) : 0;
      t.expect(got == expected, [&] {
        return q.to_string() + ": " + std::to_string(got) + " clusters with a given negative support, expected " +
               std::to_string(expected);
      });
    }
    t.expect(positive_clusters(tab) == maximal_ext_free_sets(q),
             [&] { return q.to_string() + ": positive clusters differ from maximal Ext-free sets"; });
  }
}

void check_cluster_expansion(Context& c, Tally& t) {
  const std::size_t n = c.graph.rank();
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const ClusterFan fan(tab, c.ws.clusters(q));
    std::uniform_int_distribution<int> coord(-10, 10);
    for (std::size_t s = 0; s < c.config.fan_samples; ++s) {
      RootVector gamma(n);
      for (std::size_t i = 0; i < n; ++i) gamma[i] = coord(c.rng);
      std::string problem;
      try {
        const auto e = fan.expand(gamma);
        RootVector d(n), total(n);
        std::vector<int> neg(n, 0);
        RootIndexSet support;
        for (const auto& [root, m] : e.terms) {
          total = total + root * m;
          support.push_back(tab.index(root));
          if (auto i = root.negative_simple_index())
            neg[*i] = m;
          else
            d = d + root * m;
        }
        if (!(total == gamma)) problem = "terms do not sum to gamma";
        if (!is_compatible_set(tab, support)) problem = "support is not compatible";
        for (std::size_t i = 0; i < n && problem.empty(); ++i)
          if (neg[i] != std::max(-gamma[i], 0) || d[i] != std::max(gamma[i], 0)) problem = "negative part formula fails";
      } catch (const InvariantViolation& ex) {
        problem = ex.what();
      }
      t.expect(problem.empty(), [&] { return q.to_string() + ", gamma " + gamma.to_string() + ": " + problem; });
    }
  }
}

void check_fan(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const FanReport r = verify_fan(tab, c.config.fan_samples, c.config.seed);
    t.cases += r.clusters + r.samples;
    if (!r.ok) {
      const std::size_t bad = r.wrong_size + r.non_unimodular + r.failed_samples;
      if (t.failures == 0)
        t.first = q.to_string() + ": " + (r.counterexamples.empty() ? "fan check failed" : r.counterexamples.front());
      t.failures += bad;
    }
  }
}

void check_fan_isomorphism(Context& c, Tally& t) {
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& roots = tab.roots().almost_positive();
    for (auto i : admissible_vertices(q)) {
      const Quiver r = reflect_orientation(q, i);
      const auto& rtab = c.ws.table(r);
      std::set<RootIndexSet> mapped;
      for (const auto& cl : c.ws.clusters(q)) {
        RootIndexSet img;
        for (auto a : cl) img.push_back(rtab.index(sigma(q.graph(), i, roots[a])));
        std::sort(img.begin(), img.end());
        mapped.insert(img);
      }
      const auto& target = c.ws.clusters(r);
      t.expect(mapped == std::set<RootIndexSet>(target.begin(), target.end()), [&] {
        return q.to_string() + ", i=" + std::to_string(i) + ": sigma_i does not map clusters onto clusters";
      });
    }
  }
}

// ----------------------------------------------------------------- groupoid

void check_relations(Context& c, Tally& t) {
  const auto v = check_relation_soundness(c.graph.underlying());
  t.cases += 1;
  if (!v.empty()) {
    t.failures += v.size();
    t.first = v.front();
  }
}

void check_loops(Context& c, Tally& t) {
  const auto& g = c.graph.underlying();
  const std::size_t len = c.config.loop_max_len ? c.config.loop_max_len : default_loop_bound(g);
  const LoopReport r = classify_loops(g, len, std::min(len, c.config.dual_loop_max_len));
  t.cases += r.classes + r.dual_classes;
  if (!r.ok()) {
    t.failures += r.violations.size();
    t.first = r.violations.front();
  }
  t.detail = "max_len " + std::to_string(len) + ", " + std::to_string(r.classes) + " normal forms";
}

void check_lemmas(Context& c, Tally& t) {
  const LemmaReport r = check_lemmas(c.graph.underlying(), c.config.lemma_max_len);
  t.cases += r.words;
  if (!r.ok()) {
    t.failures += r.failures;
    t.first = r.violations.front();
  }
  t.detail = "max_len " + std::to_string(r.max_len) + ", " + std::to_string(r.words) + " words, " +
             std::to_string(r.reduced) + " reduced";
}

void check_action_compatibility(Context& c, Tally& t) {
  constexpr std::size_t kLen = 3;
  for (const auto& q : c.orientations) {
    const auto& tab = c.ws.table(q);
    const auto& roots = tab.roots().almost_positive();
    std::function<void(Word&)> walk = [&](Word& w) {
      if (!w.letters.empty()) {
        const auto images = word_action_on_roots(w);
        const auto& end = c.ws.table(apply_word(w));
        for (std::size_t a = 0; a < roots.size(); ++a)
          for (std::size_t b = 0; b < roots.size(); ++b)
            t.expect(end.degree(images[a], images[b]) == tab.degree(a, b), [&] {
              return q.to_string() + ": word " + to_string(w) + " changes the degree of " + roots[a].to_string() +
                     ", " + roots[b].to_string();
            });
      }
      if (w.letters.size() == kLen) return;
      const Quiver cur = apply_word(w);
      std::vector<Letter> next{Letter::dual()};
      for (auto v : admissible_vertices(cur)) next.push_back(Letter::sigma(v));
      for (const auto& l : next) {
        w.letters.push_back(l);
        walk(w);
        w.letters.pop_back();
      }
    };
    Word w{q, {}};
    walk(w);
  }
}

// ------------------------------------------------------------------- census

void check_moebius(Context& c, Tally& t) {
  const std::size_t cap = c.config.large ? 8 : kDefaultRankCap;
  std::vector<Quiver> scope = c.orientations;
  if (c.graph.rank() > 4) scope = {alternating_orientation(c.graph.underlying()).quiver};
  for (const auto& q : scope) {
    const MoebiusReport r = moebius_consistency(q, cap);
    t.cases += r.relations + r.inversions;
    if (!r.ok()) {
      if (t.failures == 0) t.first = q.to_string() + ": " + r.violations.front();
      t.failures += r.violations.size();
    }
  }
  if (scope.size() == 1 && c.orientations.size() > 1) t.detail = "alternating orientation only";
}

void check_invariance(Context& c, Tally& t) {
  const std::size_t cap = c.config.large ? 8 : kDefaultRankCap;
  const InvarianceReport r = orientation_invariance(c.graph.underlying(), cap, c.config.jobs);
  t.expect(r.invariant, [&] { return "f+ vectors or cluster counts differ between orientations"; });
  std::string f;
  for (auto x : r.common) f += (f.empty() ? "" : ",") + std::to_string(x);
  t.detail = "f+ = (" + f + ") on " + std::to_string(r.orientations.size()) + " orientations";
}

void check_product_formula(Context& c, Tally& t, CheckStatus& status) {
  DynkinGraph dg = c.graph;
  if (!dg.irreducible()) {
    status = CheckStatus::Skip;
    t.detail = "reducible graph";
    return;
  }
  std::uint64_t formula = 0;
  std::string error;
  try {
    if (auto it = c.config.exponents.find(c.graph_name); it != c.config.exponents.end())
      dg.override_exponents(0, it->second);
    formula = positive_cluster_count(dg);
  } catch (const Error& ex) {
    error = ex.what();
  }
  t.expect(error.empty(), [&] { return error; });
  if (!error.empty()) return;
  for (const auto& q : c.orientations) {
    const std::size_t count = positive_clusters(c.ws.table(q)).size();
    t.expect(count == formula, [&] {
      return q.to_string() + ": " + std::to_string(count) + " positive clusters, product formula gives " +
             std::to_string(formula);
    });
  }
  t.detail = "product formula = " + std::to_string(formula);
}

void check_a3_complexes(Context& c, Tally& t) {
  const DynkinGraph a3 = dynkin_graph(DynkinType::A, 3);
  const TreeGraph& g = a3.underlying();
  const Quiver g0 = alternating_orientation(g).quiver;                 // 1->2<-3
  const Quiver g1(g, {Arrow{1, 2}, Arrow{2, 3}});                      // 1->2->3
  const auto& t0 = c.ws.table(g0);
  const auto& t1 = c.ws.table(g1);
  const PositiveComplex c0 = positive_complex(t0), c1 = positive_complex(t1);
  const FVector expected{1, 6, 10, 5};
  t.expect(c0.f == expected && c1.f == expected, [&] { return "f-vector is not (6, 10, 5)"; });
  const RootVector a2{0, 1, 0}, a12{1, 1, 0}, a23{0, 1, 1}, a123{1, 1, 1};
  auto edge = [](const CompatibilityTable& tab, const RootVector& x, const RootVector& y) {
    return tab.degree(x, y) == 0;
  };
  t.expect(edge(t0, a12, a23) && !edge(t0, a2, a123), [&] { return "alternating complex has the wrong edges"; });
  t.expect(edge(t1, a2, a123) && !edge(t1, a12, a23), [&] { return "linear complex has the wrong edges"; });
  t.expect(c0.degree(t0.index(a123)) == 4 && c1.degree(t1.index(a123)) == 5,
           [&] { return "degree of the highest root is not 4 and 5"; });
  t.expect(!complex_isomorphic(g0, g1), [&] { return "the two complexes are isomorphic"; });
  t.expect(complex_isomorphic(g0, g0.opposite()), [&] { return "the alternating complex differs from its opposite"; });
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

using CheckFn = std::function<void(Context&, Tally&, CheckStatus&)>;

template <typename F>
CheckFn plain(F f) {
  return [f](Context& c, Tally& t, CheckStatus&) { f(c, t); };
}

struct CheckDef {
  std::string group;
  std::string name;
  CheckFn fn;
  bool per_graph = true;
};

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> defs = {
      {"rep", "euler-identity", plain(check_euler_identity)},
      {"rep", "four-term-exactness", plain(check_four_term)},
      {"rep", "reflection-dimensions", plain(check_reflection_dimensions)},
      {"rep", "hom-additivity", plain(check_hom_additivity)},
      {"decorated", "sdim-bijection", plain(check_sdim_bijection)},
      {"decorated", "sdim-reflection", plain(check_sdim_reflection)},
      {"decorated", "root-correspondence", plain(check_correspondence)},
      {"decorated", "sigma-squared", plain(check_sigma_squared)},
      {"decorated", "e-invariance", plain(check_e_invariance)},
      {"decorated", "degree-reflection", plain(check_degree_reflection)},
      {"decorated", "duality", plain(check_duality)},
      {"decorated", "subsystem", plain(check_subsystem)},
      {"decorated", "alternating-degree", plain(check_alternating_degree)},
      {"clusters", "purity", plain(check_purity)},
      {"clusters", "negative-support", plain(check_negative_support)},
      {"clusters", "cluster-expansion", plain(check_cluster_expansion)},
      {"clusters", "smooth-complete-fan", plain(check_fan)},
      {"clusters", "fan-isomorphism", plain(check_fan_isomorphism)},
      {"groupoid", "relations", plain(check_relations)},
      {"groupoid", "alternating-loops", plain(check_loops)},
      {"groupoid", "word-lemmas", plain(check_lemmas)},
      {"groupoid", "action-compatibility", plain(check_action_compatibility)},
      {"census", "moebius", plain(check_moebius)},
      {"census", "orientation-invariance", plain(check_invariance)},
      {"census", "product-formula", check_product_formula},
      {"census", "positive-complexes-a3", plain(check_a3_complexes), false},
  };
  return defs;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "fail";
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& verify_catalog() {
  static const auto catalog = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& d : check_table()) {
      if (out.empty() || out.back().first != d.group) out.emplace_back(d.group, std::vector<std::string>{});
      out.back().second.push_back(d.name);
    }
    return out;
  }();
  return catalog;
}

VerificationReport run_verify_suite(const VerifyConfig& config) {
  const auto& defs = check_table();
  std::vector<bool> selected(defs.size(), config.checks.empty());
  for (const auto& name : config.checks) {
    bool known = false;
    for (std::size_t k = 0; k < defs.size(); ++k)
      if (defs[k].group == name || defs[k].name == name) selected[k] = known = true;
    if (!known) throw DomainError("verify: unknown check '" + name + "'");
  }

  if (config.graphs.empty()) throw DomainError("verify: no graphs in scope");
  std::vector<DynkinGraph> graphs;
  for (const auto& name : config.graphs) {
    graphs.push_back(dynkin_graph(name));
    require_rank_cap(graphs.back().rank(), config.large ? 8 : kDefaultRankCap);
  }
  for (const auto& [name, exps] : config.exponents)
    if (std::find(config.graphs.begin(), config.graphs.end(), name) == config.graphs.end())
      throw DomainError("verify: exponent override for '" + name + "', which is not in scope");

  std::vector<std::unique_ptr<Workspace>> spaces;
  for (std::size_t k = 0; k < graphs.size(); ++k) spaces.push_back(std::make_unique<Workspace>(config.jobs));
  Workspace shared(config.jobs);

  VerificationReport report;
  for (std::size_t d = 0; d < defs.size(); ++d) {
    if (!selected[d]) continue;
    const auto& def = defs[d];
    const std::size_t rounds = def.per_graph ? graphs.size() : 1;
    for (std::size_t k = 0; k < rounds; ++k) {
      const DynkinGraph& dg = def.per_graph ? graphs[k] : graphs.front();
      Context ctx{config,
                  def.per_graph ? config.graphs[k] : "A3",
                  dg,
                  enumerate_orientations(dg.underlying()),
                  def.per_graph ? *spaces[k] : shared,
                  std::mt19937_64(config.seed ^ (fnv1a(def.name) + k))};
      CheckResult res;
      res.group = def.group;
      res.name = def.name;
      res.scope = def.per_graph ? dg.name() : "A3";
      Tally tally;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        def.fn(ctx, tally, res.status);
      } catch (const ResourceError&) {
        throw;
      } catch (const std::exception& ex) {
        ++tally.failures;
        if (tally.first.empty()) tally.first = std::string("exception: ") + ex.what();
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      res.cases = tally.cases;
      res.failures = tally.failures;
      res.detail = tally.detail;
      res.counterexample = tally.first;
      if (tally.failures > 0) res.status = CheckStatus::Fail;
      report.checks.push_back(std::move(res));
    }
  }
  return report;
}

}  // namespace gassoc
