#include "gassoc/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gassoc/decorated.hpp"
#include "gassoc/errors.hpp"

namespace gassoc {

namespace {

constexpr std::size_t kMaxViolations = 20;

// Orientation bookkeeping on positions. An orientation is a Quiver mask:
// bit k set means edge k points from its larger to its smaller endpoint.
struct TreeContext {
  const TreeGraph& g;
  std::size_t n;
  std::vector<std::uint64_t> incident;  // edges at each position
  std::vector<std::uint64_t> larger;    // incident edges where the vertex is the larger endpoint
  std::vector<std::uint64_t> smaller;
  std::vector<std::uint64_t> nbr;       // neighbour positions as bits
  std::uint64_t all_edges = 0;
  std::vector<std::size_t> component;
  std::size_t num_components = 0;

  explicit TreeContext(const TreeGraph& graph)
      : g(graph), n(graph.size()), incident(n, 0), larger(n, 0), smaller(n, 0), nbr(n, 0) {
    if (n > 64) throw ResourceError("groupoid: at most 64 vertices are supported");
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      const std::size_t a = g.index_of(edges[k].first), b = g.index_of(edges[k].second);
      incident[a] |= bit;
      incident[b] |= bit;
      smaller[a] |= bit;
      larger[b] |= bit;
      nbr[a] |= std::uint64_t{1} << b;
      nbr[b] |= std::uint64_t{1} << a;
      all_edges |= bit;
    }
    component = g.component_labels();
    num_components = g.components().size();
  }

  bool is_source(std::uint64_t mask, std::size_t p) const { return (mask & incident[p]) == larger[p]; }
  bool is_sink(std::uint64_t mask, std::size_t p) const { return (mask & incident[p]) == smaller[p]; }
  bool admissible(std::uint64_t mask, std::size_t p) const { return is_source(mask, p) || is_sink(mask, p); }
  bool linked(std::size_t p, std::size_t q) const { return (nbr[p] >> q) & 1U; }
  bool blocks(std::size_t p, std::size_t q) const { return p == q || linked(p, q); }

  // Alternating orientation: each component's smallest vertex is a source.
  std::uint64_t alternating_mask() const { return alternating_orientation(g).quiver.mask(); }
};

using Positions = std::vector<int>;

// Appends p to a reduced Sigma word, cancelling against the last occurrence
// of p if only commuting letters lie between them.
void push_letter(Positions& s, int p, const TreeContext& ctx) {
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s[k] == p) {
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (ctx.linked(static_cast<std::size_t>(s[k]), static_cast<std::size_t>(p))) break;
  }
  s.push_back(p);
}

Positions reduce(const Positions& letters, const TreeContext& ctx) {
  Positions s;
  for (int p : letters) push_letter(s, p, ctx);
  return s;
}

std::vector<Positions> foata_steps(const Positions& s, const TreeContext& ctx) {
  std::vector<Positions> steps;
  std::vector<bool> used(s.size(), false);
  std::size_t remaining = s.size();
  while (remaining > 0) {
    std::vector<std::size_t> taken;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (used[k]) continue;
      bool free = true;
      for (std::size_t j = 0; j < k && free; ++j)
        if (!used[j] && ctx.blocks(static_cast<std::size_t>(s[j]), static_cast<std::size_t>(s[k]))) free = false;
      if (free) taken.push_back(k);
    }
    Positions step;
    for (auto k : taken) {
      used[k] = true;
      step.push_back(s[k]);
    }
    std::sort(step.begin(), step.end());
    remaining -= taken.size();
    steps.push_back(std::move(step));
  }
  return steps;
}

Positions flatten(const std::vector<Positions>& steps) {
  Positions out;
  for (const auto& st : steps) out.insert(out.end(), st.begin(), st.end());
  return out;
}

// Canonical flattened Foata form of a Sigma word.
Positions canonical(const Positions& letters, const TreeContext& ctx) {
  return flatten(foata_steps(reduce(letters, ctx), ctx));
}

std::string positions_to_string(const Positions& s, const TreeContext& ctx) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(ctx.g.vertex_at(static_cast<std::size_t>(s[k])));
  }
  return out + "]";
}

// Validates applicability and returns the Sigma part (positions) and the
// number of D letters.
std::pair<Positions, std::size_t> split_word(const Word& w, const TreeContext& ctx) {
  std::uint64_t mask = w.start.mask();
  Positions sigma;
  std::size_t duals = 0;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (l.is_dual()) {
      mask ^= ctx.all_edges;
      ++duals;
      continue;
    }
    if (!ctx.g.contains(l.vertex))
      throw DomainError("word: letter " + std::to_string(k) + " names unknown vertex " + std::to_string(l.vertex));
    const std::size_t p = ctx.g.index_of(l.vertex);
    if (!ctx.admissible(mask, p))
      throw AdmissibilityError("word: letter " + std::to_string(k) + " (Sigma_" + std::to_string(l.vertex) +
                               ") is not applicable at " + Quiver::from_mask(ctx.g, mask).to_string());
    mask ^= ctx.incident[p];
    sigma.push_back(static_cast<int>(p));
  }
  return {sigma, duals};
}

Positions dual_free_positions(const Word& w, const TreeContext& ctx, const char* who) {
  for (const auto& l : w.letters)
    if (l.is_dual()) throw DomainError(std::string(who) + ": word contains D");
  return split_word(w, ctx).first;
}

bool criterion_reduced(const Positions& s, const TreeContext& ctx) {
  for (std::size_t b = 0; b < s.size(); ++b)
    for (std::size_t a = b; a-- > 0;) {
      if (ctx.linked(static_cast<std::size_t>(s[a]), static_cast<std::size_t>(s[b]))) break;
      if (s[a] == s[b]) return false;
    }
  return true;
}

bool inbetween_holds(const Positions& s, const TreeContext& ctx) {
  for (std::size_t b = 0; b < s.size(); ++b) {
    std::size_t a = b;
    while (a-- > 0 && s[a] != s[b]) {
    }
    if (a == static_cast<std::size_t>(-1)) continue;
    const auto pi = static_cast<std::size_t>(s[b]);
    for (std::size_t j = 0; j < ctx.n; ++j) {
      if (!ctx.linked(pi, j)) continue;
      std::size_t count = 0;
      for (std::size_t k = a + 1; k < b; ++k) count += static_cast<std::size_t>(s[k]) == j;
      if (count != 1) return false;
    }
  }
  return true;
}

bool extremal_holds(const Positions& s, const TreeContext& ctx) {
  for (std::size_t p = 0; p < ctx.n; ++p) {
    if (ctx.nbr[p] == 0) continue;
    std::size_t last = s.size();
    for (std::size_t k = 0; k < s.size(); ++k)
      if (static_cast<std::size_t>(s[k]) == p) last = k;
    if (last == s.size()) continue;
    bool none = true, each_once = true;
    for (std::size_t j = 0; j < ctx.n; ++j) {
      if (!ctx.linked(p, j)) continue;
      std::size_t count = 0;
      for (std::size_t k = last + 1; k < s.size(); ++k) count += static_cast<std::size_t>(s[k]) == j;
      if (count != 0) none = false;
      if (count != 1) each_once = false;
    }
    if (none == each_once) return false;
  }
  return true;
}

// Letters of a Sigma word restricted to one component, order kept.
Positions project(const Positions& s, std::size_t comp, const TreeContext& ctx) {
  Positions out;
  for (int p : s)
    if (ctx.component[static_cast<std::size_t>(p)] == comp) out.push_back(p);
  return out;
}

struct ComponentTargets {
  Positions plus, minus;  // I+ and I- of the component, ascending
  std::map<Positions, std::size_t> loops;             // canonical form -> smallest k
  std::map<std::pair<bool, Positions>, std::size_t> dual;  // (parity, form) -> smallest m
};

std::vector<ComponentTargets> build_targets(const TreeContext& ctx, std::size_t max_len, std::size_t dual_len) {
  const auto alt = alternating_orientation(ctx.g);
  std::vector<ComponentTargets> out(ctx.num_components);
  for (auto v : alt.plus) out[ctx.component[ctx.g.index_of(v)]].plus.push_back(static_cast<int>(ctx.g.index_of(v)));
  for (auto v : alt.minus)
    out[ctx.component[ctx.g.index_of(v)]].minus.push_back(static_cast<int>(ctx.g.index_of(v)));

  for (auto& t : out) {
    // Alternating products of blocks; blocks = 2k for part (a), m for part (b).
    const std::size_t limit = std::max(max_len, dual_len) + 1;
    for (int first = 0; first < 2; ++first) {
      Positions word;
      for (std::size_t m = 0; m <= 2 * limit; ++m) {
        const Positions form = canonical(word, ctx);
        if (form.size() <= limit) {
          if (m % 2 == 0) t.loops.emplace(form, m / 2);
          t.dual.emplace(std::make_pair(m % 2 == 1, form), m);
        }
        const bool plus_block = (m % 2 == 0) == (first == 0);
        const Positions& block = plus_block ? t.plus : t.minus;
        word.insert(word.end(), block.begin(), block.end());
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Letter& l) { return l.is_dual() ? "D" : std::to_string(l.vertex); }

Word sigma_word(const Quiver& start, const std::vector<Vertex>& vertices) {
  Word w{start, {}};
  for (auto v : vertices) w.letters.push_back(Letter::sigma(v));
  return w;
}

Word parse_word(const Quiver& start, const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  Word w{start, {}};
  const auto alt = alternating_orientation(start.graph());
  std::string tok;
  while (in >> tok) {
    if (tok == "D" || tok == "d") {
      w.letters.push_back(Letter::dual());
    } else if (tok == "+" || tok == "-") {
      for (auto v : tok == "+" ? alt.plus : alt.minus) w.letters.push_back(Letter::sigma(v));
    } else {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("word: unrecognised token '" + tok + "'");
      if (!start.graph().contains(v)) throw DomainError("word: unknown vertex " + tok);
      w.letters.push_back(Letter::sigma(v));
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.letters.size(); ++k) out += (k ? "," : "") + to_string(w.letters[k]);
  return out + "]";
}

Quiver apply_word(const Word& w) {
  const TreeContext ctx(w.start.graph());
  std::uint64_t mask = w.start.mask();
  const auto [sigma, duals] = split_word(w, ctx);
  for (int p : sigma) mask ^= ctx.incident[static_cast<std::size_t>(p)];
  if (duals % 2) mask ^= ctx.all_edges;
  return Quiver::from_mask(w.start.graph(), mask);
}

std::size_t NormalForm::length() const {
  std::size_t s = 0;
  for (const auto& st : steps) s += st.size();
  return s;
}

std::vector<Vertex> NormalForm::letters() const {
  std::vector<Vertex> out;
  for (const auto& st : steps) out.insert(out.end(), st.begin(), st.end());
  return out;
}

std::string NormalForm::to_string() const {
  std::string out = dual ? "D" : "";
  for (const auto& st : steps) {
    out += "(";
    for (std::size_t k = 0; k < st.size(); ++k) out += (k ? " " : "") + std::to_string(st[k]);
    out += ")";
  }
  return out.empty() ? "1" : out;
}

NormalForm normal_form(const Word& w) {
  const TreeContext ctx(w.start.graph());
  const auto [sigma, duals] = split_word(w, ctx);
  const Positions reduced = reduce(sigma, ctx);
  if (reduce(reduced, ctx) != reduced) throw InvariantViolation("normal_form: cancellation pass is not idempotent");
  NormalForm nf;
  nf.dual = duals % 2 == 1;
  for (const auto& st : foata_steps(reduced, ctx)) {
    std::vector<Vertex> step;
    for (int p : st) step.push_back(ctx.g.vertex_at(static_cast<std::size_t>(p)));
    nf.steps.push_back(std::move(step));
  }
  return nf;
}

bool is_reduced(const Word& w) {
  const TreeContext ctx(w.start.graph());
  return criterion_reduced(dual_free_positions(w, ctx, "is_reduced"), ctx);
}

bool check_inbetween(const Word& w) {
  const TreeContext ctx(w.start.graph());
  const Positions s = dual_free_positions(w, ctx, "check_inbetween");
  if (!criterion_reduced(s, ctx)) throw DomainError("check_inbetween: word is not reduced");
  return inbetween_holds(s, ctx);
}

bool check_extremal(const Word& w) {
  const TreeContext ctx(w.start.graph());
  const Positions s = dual_free_positions(w, ctx, "check_extremal");
  if (!criterion_reduced(s, ctx)) throw DomainError("check_extremal: word is not reduced");
  const std::uint64_t end = apply_word(w).mask();
  const std::uint64_t alt = ctx.alternating_mask();
  if (end != alt && end != (alt ^ ctx.all_edges))
    throw DomainError("check_extremal: word does not end at the alternating orientation or its opposite");
  return extremal_holds(s, ctx);
}

std::size_t default_loop_bound(const TreeGraph& g) { return 2 * g.size() * (g.size() + 1); }

LoopReport classify_loops(const TreeGraph& g, std::size_t max_len, std::size_t dual_max_len) {
  const TreeContext ctx(g);
  const auto targets = build_targets(ctx, max_len, dual_max_len);
  const std::uint64_t start = ctx.alternating_mask();
  LoopReport report;
  report.max_len = max_len;
  report.dual_max_len = dual_max_len;

  auto violation = [&](std::string msg) {
    if (report.violations.size() < kMaxViolations) report.violations.push_back(std::move(msg));
  };

  struct Entry {
    std::uint64_t mask = 0;
    mpz_class words;
  };

  // Part (a): words are grouped by the canonical form of their Sigma part;
  // all words in a class share the end orientation.
  {
    std::map<Positions, Entry> layer{{Positions{}, Entry{start, 1}}};
    std::set<Positions> seen{Positions{}};
    for (std::size_t len = 0;; ++len) {
      for (const auto& [form, e] : layer) {
        if (e.mask != start) continue;
        report.loops_by_length[len] += e.words;
        std::vector<std::size_t> key;
        for (std::size_t c = 0; c < ctx.num_components; ++c) {
          const auto it = targets[c].loops.find(canonical(project(form, c, ctx), ctx));
          if (it == targets[c].loops.end()) {
            violation("loop " + positions_to_string(form, ctx) + " is not an alternating power on component " +
                      std::to_string(c));
            key.clear();
            break;
          }
          key.push_back(it->second);
        }
        if (!key.empty()) report.loops_by_k[key] += e.words;
      }
      if (len == max_len) break;
      std::map<Positions, Entry> next;
      for (const auto& [form, e] : layer)
        for (std::size_t p = 0; p < ctx.n; ++p) {
          if (!ctx.admissible(e.mask, p)) continue;
          Positions w = form;
          w.push_back(static_cast<int>(p));
          auto& slot = next[canonical(w, ctx)];
          slot.mask = e.mask ^ ctx.incident[p];
          slot.words += e.words;
        }
      for (const auto& [form, e] : next) seen.insert(form);
      layer = std::move(next);
    }
    report.classes = seen.size();
  }

  // Part (b): D allowed; classes are (parity, canonical Sigma part).
  {
    using Key = std::pair<bool, Positions>;
    std::map<Key, Entry> layer{{Key{false, {}}, Entry{start, 1}}};
    std::set<Key> seen{Key{false, {}}};
    for (std::size_t len = 0;; ++len) {
      for (const auto& [key, e] : layer) {
        if (e.mask != start) continue;
        std::vector<std::size_t> mkey;
        for (std::size_t c = 0; c < ctx.num_components; ++c) {
          const auto it = targets[c].dual.find({key.first, canonical(project(key.second, c, ctx), ctx)});
          if (it == targets[c].dual.end()) {
            violation(std::string("loop ") + (key.first ? "D" : "") + positions_to_string(key.second, ctx) +
                      " is not a product of T+ and T- on component " + std::to_string(c));
            mkey.clear();
            break;
          }
          mkey.push_back(it->second);
        }
        if (!mkey.empty()) report.dual_loops_by_m[mkey] += e.words;
      }
      if (len == dual_max_len) break;
      std::map<Key, Entry> next;
      for (const auto& [key, e] : layer) {
        auto& d = next[Key{!key.first, key.second}];
        d.mask = e.mask ^ ctx.all_edges;
        d.words += e.words;
        for (std::size_t p = 0; p < ctx.n; ++p) {
          if (!ctx.admissible(e.mask, p)) continue;
          Positions w = key.second;
          w.push_back(static_cast<int>(p));
          auto& slot = next[Key{key.first, canonical(w, ctx)}];
          slot.mask = e.mask ^ ctx.incident[p];
          slot.words += e.words;
        }
      }
      for (const auto& [key, e] : next) seen.insert(key);
      layer = std::move(next);
    }
    report.dual_classes = seen.size();
  }
  return report;
}

namespace {

struct LemmaSearch {
  const TreeContext& ctx;
  std::size_t max_len;
  std::uint64_t start = 0;
  std::uint64_t alt = 0;
  LemmaReport& report;
  Positions word;
  Positions stack;  // incremental reduced form

  void fail(const std::string& what) {
    ++report.failures;
    if (report.violations.size() < kMaxViolations)
      report.violations.push_back(what + " at " + Quiver::from_mask(ctx.g, start).to_string() + ": " +
                                  positions_to_string(word, ctx));
  }

  void visit(std::uint64_t mask, bool reduced) {
    ++report.words;
    if (reduced != (stack.size() == word.size())) fail("reduced criterion disagrees with normal-form length");
    if (reduced) {
      ++report.reduced;
      if (mask == alt || mask == (alt ^ ctx.all_edges)) {
        ++report.extremal_checked;
        if (!extremal_holds(word, ctx)) fail("extremal lemma fails");
      }
      if (mask == start && !word.empty()) {
        ++report.loops_checked;
        std::vector<std::uint64_t> used(ctx.num_components, 0), all(ctx.num_components, 0);
        for (std::size_t p = 0; p < ctx.n; ++p) all[ctx.component[p]] |= std::uint64_t{1} << p;
        for (int p : word) used[ctx.component[static_cast<std::size_t>(p)]] |= std::uint64_t{1} << p;
        for (std::size_t c = 0; c < ctx.num_components; ++c)
          if (used[c] != 0 && used[c] != all[c]) fail("loop misses a vertex of its component");
      }
    }
    if (word.size() == max_len) return;
    for (std::size_t p = 0; p < ctx.n; ++p) {
      if (!ctx.admissible(mask, p)) continue;
      // Reduced criterion on the new pair (last occurrence of p, end).
      bool still = reduced;
      std::size_t last = word.size();
      for (std::size_t k = word.size(); k-- > 0;)
        if (static_cast<std::size_t>(word[k]) == p) {
          last = k;
          break;
        }
      if (still && last != word.size()) {
        bool linked_between = false;
        for (std::size_t k = last + 1; k < word.size(); ++k)
          if (ctx.linked(p, static_cast<std::size_t>(word[k]))) linked_between = true;
        still = linked_between;
      }
      const Positions saved = stack;
      push_letter(stack, static_cast<int>(p), ctx);
      word.push_back(static_cast<int>(p));
      if (still && last != word.size() - 1) {
        for (std::size_t j = 0; j < ctx.n; ++j) {
          if (!ctx.linked(p, j)) continue;
          std::size_t count = 0;
          for (std::size_t k = last + 1; k + 1 < word.size(); ++k) count += static_cast<std::size_t>(word[k]) == j;
          if (count != 1) {
            fail("in-between lemma fails");
            break;
          }
        }
      }
      visit(mask ^ ctx.incident[p], still);
      word.pop_back();
      stack = saved;
    }
  }
};

}  // namespace

LemmaReport check_lemmas(const TreeGraph& g, std::size_t max_len) {
  const TreeContext ctx(g);
  LemmaReport report;
  report.max_len = max_len;
  const std::uint64_t alt = ctx.alternating_mask();
  const std::size_t m = g.edges().size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    LemmaSearch search{ctx, max_len, mask, alt, report, {}, {}};
    search.visit(mask, true);
  }
  return report;
}

std::vector<std::string> check_relation_soundness(const TreeGraph& g) {
  std::vector<std::string> out;
  bool ade = true;
  try {
    require_ade(g);
  } catch (const UnsupportedGraphError&) {
    ade = false;
  }
  auto compare = [&](const Word& a, const Word& b, const std::string& name) {
    if (!(apply_word(a) == apply_word(b))) {
      out.push_back(name + ": end orientations differ for " + to_string(a) + " vs " + to_string(b) + " at " +
                    a.start.to_string());
      return;
    }
    if (ade && word_action_on_roots(a) != word_action_on_roots(b))
      out.push_back(name + ": root actions differ for " + to_string(a) + " vs " + to_string(b) + " at " +
                    a.start.to_string());
    if (normal_form(a) != normal_form(b))
      out.push_back(name + ": normal forms differ for " + to_string(a) + " vs " + to_string(b));
  };
  const Letter d = Letter::dual();
  for (const auto& q : enumerate_orientations(g)) {
    compare(Word{q, {d, d}}, Word{q, {}}, "R3");
    for (auto i : g.vertices()) {
      if (!q.is_admissible(i)) continue;
      const Letter si = Letter::sigma(i);
      compare(Word{q, {si, si}}, Word{q, {}}, "R1");
      compare(Word{q, {d, si}}, Word{q, {si, d}}, "R4");
      for (auto j : g.vertices()) {
        if (j == i || g.linked(i, j) || !q.is_admissible(j)) continue;
        compare(Word{q, {si, Letter::sigma(j)}}, Word{q, {Letter::sigma(j), si}}, "R2");
      }
    }
  }
  return out;
}

std::vector<RootVector> word_action_on_roots(const Word& w) {
  const RootSystem roots(w.start.graph());
  apply_word(w);
  std::vector<RootVector> images;
  std::set<RootVector> hit;
  for (const auto& alpha : roots.almost_positive()) {
    RootVector v = alpha;
    for (const auto& l : w.letters)
      if (!l.is_dual()) v = sigma(w.start.graph(), l.vertex, v);
    if (!roots.is_almost_positive(v))
      throw InvariantViolation("word_action_on_roots: " + alpha.to_string() + " leaves the almost positive roots");
    if (!hit.insert(v).second) throw InvariantViolation("word_action_on_roots: action is not injective");
    images.push_back(std::move(v));
  }
  return images;
}

}  // namespace gassoc
