// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "gassoc/census.hpp"
#include "gassoc/errors.hpp"
#include "gassoc/groupoid.hpp"

using namespace gassoc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what();
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << cases_ << " cases";
    if (failures_) out << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

std::vector<Quiver> orientations(const std::string& name) {
  return enumerate_orientations(dynkin_graph(name).underlying());
}

RootVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coord(-10, 10);
  RootVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = coord(rng);
  return v;
}

Outcome positive_cluster_counts() {
  Tally t;
  const std::vector<std::pair<std::string, std::uint64_t>> cases{
      {"A2", 2}, {"A3", 5}, {"A4", 14}, {"D4", 20}, {"D5", 77}, {"E6", 418}};
  std::ostringstream summary;
  for (const auto& [name, expected] : cases) {
    const auto g = dynkin_graph(name);
    const std::uint64_t formula = positive_cluster_count(g);
    t.expect(formula == expected, [&] { return name + " formula gives " + std::to_string(formula); });
    const auto inv = orientation_invariance(g.underlying(), kDefaultRankCap, jobs());
    for (const auto& o : inv.orientations)
      t.expect(o.f_plus.size() == g.rank() + 1 && o.f_plus.back() == formula,
               [&] { return name + " orientation " + o.quiver.to_string() + " enumerates a different count"; });
    summary << name << "=" << formula << "(" << inv.orientations.size() << " orientations) ";
  }
  return t.finish(summary.str());
}

Outcome purity_and_smoothness() {
  Tally t;
  std::size_t clusters = 0;
  for (const std::string name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5"})
    for (const auto& q : orientations(name)) {
      const CompatibilityTable tab(q, jobs());
      for (const auto& c : enumerate_clusters(tab)) {
        ++clusters;
        t.expect(c.size() == q.rank(), [&] { return name + " cluster of size " + std::to_string(c.size()); });
        const long det = root_matrix_determinant(tab, c);
        t.expect(det == 1 || det == -1, [&] { return name + " cluster with determinant " + std::to_string(det); });
      }
    }
  return t.finish(std::to_string(clusters) + " clusters over all orientations of A1..A5, D4, D5");
}

Outcome cluster_expansion_sampling() {
  Tally t;
  for (const std::string name : {"A2", "A3", "D4"})
    for (const auto& q : orientations(name)) {
      const CompatibilityTable tab(q);
      const ClusterFan fan(tab);
      std::mt19937_64 rng(kDefaultSeed);
      for (int s = 0; s < 1000; ++s) {
        const RootVector g = random_vector(rng, q.rank());
        ClusterExpansion e;
        try {
          e = fan.expand(g);
        } catch (const std::exception& ex) {
          t.expect(false, [&] { return name + " " + g.to_string() + ": " + ex.what(); });
          continue;
        }
        RootVector sum(q.rank());
        RootIndexSet support;
        bool neg_ok = true;
        for (const auto& [r, m] : e.terms) {
          sum = sum + r * m;
          support.push_back(tab.index(r));
          if (auto i = r.negative_simple_index()) neg_ok = neg_ok && m == std::max(-g[*i], 0);
        }
        for (std::size_t i = 0; i < q.rank(); ++i) {
          const bool present = std::any_of(e.terms.begin(), e.terms.end(), [&](const auto& term) {
            return term.first.negative_simple_index() == i;
          });
          neg_ok = neg_ok && present == (g[i] < 0);
        }
        std::sort(support.begin(), support.end());
        t.expect(sum == g && neg_ok && is_compatible_set(tab, support),
                 [&] { return name + " expansion of " + g.to_string() + " is wrong"; });
      }
    }
  return t.finish("1000 vectors in [-10,10]^n per orientation of A2, A3, D4, seed 0x5EED");
}

Outcome e_invariance() {
  Tally t;
  for (const std::string name : {"A2", "A3", "A4", "D4"})
    for (const auto& q : orientations(name)) {
      const CompatibilityTable tab(q);
      for (auto i : q.graph().vertices()) {
        if (!q.is_admissible(i)) continue;
        std::vector<DecoratedRep> images;
        for (std::size_t a = 0; a < tab.size(); ++a) images.push_back(extended_reflect(tab.indecomposable(a), i));
        for (std::size_t a = 0; a < tab.size(); ++a)
          for (std::size_t b = 0; b < tab.size(); ++b)
            t.expect(e_dim(images[a], images[b]) == e_dim(tab.indecomposable(a), tab.indecomposable(b)), [&] {
              return name + " " + q.to_string() + " i=" + std::to_string(i) + " pair " +
                     tab.roots().almost_positive()[a].to_string() + "," + tab.roots().almost_positive()[b].to_string();
            });
      }
    }
  return t.finish("all ordered pairs, all admissible i, all orientations of A2, A3, A4, D4");
}

Outcome sigma_compatibility() {
  Tally t;
  for (const std::string name : {"A2", "A3", "A4", "D4"}) {
    for (const auto& q : orientations(name)) {
      const CompatibilityTable tab(q);
      const auto& roots = tab.roots().almost_positive();
      for (auto i : q.graph().vertices()) {
        if (!q.is_admissible(i)) continue;
        const CompatibilityTable other(reflect_orientation(q, i));
        for (const auto& a : roots)
          for (const auto& b : roots)
            t.expect(other.degree(sigma(q.graph(), i, a), sigma(q.graph(), i, b)) == tab.degree(a, b),
                     [&] { return name + " sigma_" + std::to_string(i) + " on " + a.to_string() + "," + b.to_string(); });
      }
    }
    const TreeGraph g = dynkin_graph(name).underlying();
    const CompatibilityTable alt(alternating_orientation(g).quiver);
    const auto& roots = alt.roots().almost_positive();
    for (const auto& b : roots)
      for (std::size_t i = 0; i < g.size(); ++i)
        t.expect(alt.degree(RootVector::simple(g.size(), i) * -1, b) == static_cast<std::size_t>(std::max(b[i], 0)),
                 [&] { return name + " first relation at " + b.to_string(); });
    for (const auto& a : roots)
      for (const auto& b : roots)
        for (Sign s : {Sign::Plus, Sign::Minus})
          t.expect(alt.degree(tau(g, s, a), tau(g, s, b)) == alt.degree(a, b),
                   [&] { return name + " tau invariance at " + a.to_string() + "," + b.to_string(); });
  }
  return t.finish("sigma_i across every admissible reflection, and both alternating relations, on A2, A3, A4, D4");
}

Outcome sigma_squared_and_sdim() {
  Tally t;
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t sums = 0;
  for (const std::string name : {"A2", "A3", "A4", "D4"})
    for (const auto& q : orientations(name)) {
      const CompatibilityTable tab(q);
      const IndecomposableCatalog cat(q);
      std::vector<DecoratedRep> subjects;
      for (std::size_t a = 0; a < tab.size(); ++a) subjects.push_back(tab.indecomposable(a));
      std::uniform_int_distribution<std::size_t> pick(0, tab.size() - 1);
      std::uniform_int_distribution<int> parts(2, 4);
      for (int s = 0; s < 200; ++s, ++sums) {
        DecoratedRep m = tab.indecomposable(pick(rng));
        for (int k = parts(rng) - 1; k > 0; --k) m = direct_sum(m, tab.indecomposable(pick(rng)));
        subjects.push_back(m);
      }
      const auto& g = q.graph();
      for (auto i : g.vertices()) {
        if (!q.is_admissible(i)) continue;
        const std::size_t p = g.index_of(i);
        for (const auto& m : subjects) {
          const DecoratedRep once = extended_reflect(m, i);
          t.expect(isoclass(extended_reflect(once, i), cat) == isoclass(m, cat),
                   [&] { return name + " Sigma_" + std::to_string(i) + " squared moves " + sdim(m).to_string(); });
          bool hypothesis = m.plus.dims()[p] * m.minus[p] == 0;
          for (auto k : g.neighbours(p)) hypothesis = hypothesis && m.plus.dims()[k] * m.minus[k] == 0;
          if (hypothesis)
            t.expect(sdim(once) == sigma(g, i, sdim(m)),
                     [&] { return name + " sdim fails to commute at " + std::to_string(i) + " on " + sdim(m).to_string(); });
        }
      }
    }
  return t.finish("all decorated indecomposables plus " + std::to_string(sums) +
                  " seeded sums; sdim hypothesis taken at i and its neighbours");
}

Outcome ext_free_enumeration() {
  Tally t;
  std::ostringstream summary;
  const std::vector<std::pair<std::string, std::size_t>> cases{{"A3", 4}, {"A4", 8}, {"D4", 8}};
  for (const auto& [name, count] : cases) {
    const auto inv = orientation_invariance(dynkin_graph(name).underlying(), kDefaultRankCap, jobs());
    t.expect(inv.orientations.size() == count && inv.invariant,
             [&] { return name + " f+ vectors differ between orientations"; });
    for (const auto& o : inv.orientations) {
      const auto r = moebius_consistency(o.quiver);
      t.expect(r.ok(), [&] { return name + " " + o.quiver.to_string() + ": " + r.violations.front(); });
    }
    summary << name << " f+=(";
    for (std::size_t k = 0; k < inv.common.size(); ++k) summary << (k ? "," : "") << inv.common[k];
    summary << ") ";
  }
  return t.finish(summary.str() + "Moebius relation for every (k,J) and orientation");
}

Outcome a3_complexes() {
  Tally t;
  const TreeGraph g = dynkin_graph("A3").underlying();
  const Quiver g0 = alternating_orientation(g).quiver;
  const Quiver g1(g, {Arrow{1, 2}, Arrow{2, 3}});
  const CompatibilityTable t0(g0), t1(g1);
  const auto c0 = positive_complex(t0), c1 = positive_complex(t1);
  const FVector expected{1, 6, 10, 5};
  t.expect(c0.f == expected, [] { return "alternating f-vector"; });
  t.expect(c1.f == expected, [] { return "linear f-vector"; });
  const RootVector a2{0, 1, 0}, a12{1, 1, 0}, a23{0, 1, 1}, a123{1, 1, 1};
  t.expect(c0.has_edge(t0.index(a12), t0.index(a23)), [] { return "alternating lacks {a1+a2, a2+a3}"; });
  t.expect(!c0.has_edge(t0.index(a2), t0.index(a123)), [] { return "alternating has {a2, a1+a2+a3}"; });
  t.expect(c1.has_edge(t1.index(a2), t1.index(a123)), [] { return "linear lacks {a2, a1+a2+a3}"; });
  t.expect(!c1.has_edge(t1.index(a12), t1.index(a23)), [] { return "linear has {a1+a2, a2+a3}"; });
  t.expect(!complex_isomorphic(g0, g1), [] { return "complexes are isomorphic"; });
  return t.finish("f=(6,10,5) for both, edges differ, degree of a1+a2+a3 is " +
                  std::to_string(c0.degree(t0.index(a123))) + " vs " + std::to_string(c1.degree(t1.index(a123))) +
                  ", not isomorphic");
}

Outcome alternating_loops() {
  Tally t;
  const std::vector<std::pair<std::string, TreeGraph>> trees{
      {"A1", dynkin_graph("A1").underlying()},
      {"A2", dynkin_graph("A2").underlying()},
      {"A3", dynkin_graph("A3").underlying()},
      {"A4", dynkin_graph("A4").underlying()},
      {"star", TreeGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}})}};
  mpz_class loops = 0;
  std::uint64_t words = 0;
  for (const auto& [name, g] : trees) {
    const LoopReport lr = classify_loops(g, 12, 8);
    t.expect(lr.ok(), [&] { return name + ": " + lr.violations.front(); });
    for (const auto& [len, c] : lr.loops_by_length) loops += c;
    const LemmaReport lem = check_lemmas(g, 12);
    t.expect(lem.ok(), [&] { return name + ": " + (lem.violations.empty() ? "lemma failure" : lem.violations.front()); });
    words += lem.words;
  }
  return t.finish(loops.get_str() + " loops at the alternating orientation and " + std::to_string(words) +
                  " words from every orientation, length <= 12, all trees on <= 4 vertices");
}

Outcome homological_coherence() {
  Tally t;
  std::size_t pairs = 0;
  for (const std::string name : {"A1", "A2", "A3", "A4", "D4", "A1+A1", "A1+A2", "A2+A2", "A1+A3", "A1+A1+A2"})
    for (const auto& q : orientations(name)) {
      const IndecomposableCatalog cat(q);
      const auto& reps = cat.reps();
      for (const auto& m : reps)
        for (const auto& n : reps) {
          ++pairs;
          const long hom = static_cast<long>(hom_dim(m, n));
          const long euler = euler_form(q, m.dims(), n.dims());
          const long ext = static_cast<long>(ext_dim(m, n));
          t.expect(hom - euler >= 0 && hom - ext == euler,
                   [&] { return name + " pair " + m.dims().to_string() + "," + n.dims().to_string(); });
        }
      for (auto i : q.graph().vertices()) {
        if (!q.is_admissible(i)) continue;
        const auto ei = Representation::simple(q, i);
        for (const auto& m : reps) {
          const Matrix st = stacked_map_at(m, i);
          const long r = static_cast<long>(rank(st));
          long lhs = 0;
          if (q.is_source(i)) {
            // 0 -> Hom(E_i,M) -> M_i -> sum_{i->j} M_j -> Ext(E_i,M) -> 0
            const long h = static_cast<long>(hom_dim(ei, m)), e = static_cast<long>(ext_dim(ei, m));
            lhs = h - m.dim_at(i) + static_cast<long>(st.rows()) - e;
            t.expect(h == m.dim_at(i) - r, [&] { return name + " kernel mismatch at " + std::to_string(i); });
          } else {
            // 0 -> Hom(M,E_i) -> M_i -> sum_{j->i} M_j -> Ext(M,E_i) -> 0, dualised
            const long h = static_cast<long>(hom_dim(m, ei)), e = static_cast<long>(ext_dim(m, ei));
            lhs = h - m.dim_at(i) + static_cast<long>(st.cols()) - e;
            t.expect(h == m.dim_at(i) - r, [&] { return name + " cokernel mismatch at " + std::to_string(i); });
          }
          t.expect(lhs == 0, [&] { return name + " four-term sum " + std::to_string(lhs) + " at " + m.dims().to_string(); });
        }
      }
    }
  return t.finish(std::to_string(pairs) + " indecomposable pairs over all orientations of rank <= 4 graphs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"positive-cluster counts match the product formula", positive_cluster_counts},
      {"purity and smoothness", purity_and_smoothness},
      {"unique cluster expansion", cluster_expansion_sampling},
      {"E-invariance under extended reflections", e_invariance},
      {"compatibility degree under sigma_i and the alternating relations", sigma_compatibility},
      {"Sigma_i squared and sdim reflection", sigma_squared_and_sdim},
      {"Ext-free set enumeration and Moebius relation", ext_free_enumeration},
      {"A3 positive complexes", a3_complexes},
      {"alternating loops and word lemmas (bounded)", alternating_loops},
      {"hom - ext = Euler form and four-term exactness", homological_coherence},
  };
  int failed = 0;
  double total = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s %-66s %8.3f s  %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed in %.3f s\n", criteria.size() - failed, criteria.size(), total);
  return failed ? 1 : 0;
}
