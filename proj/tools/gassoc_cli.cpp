// Command-line front end: root tables, compatibility degrees, clusters and
// fans, sigma/tau words, groupoid checks, census data and the verification
// suite. JSON goes to stdout; diagnostics and timings go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gassoc/census.hpp"
#include "gassoc/errors.hpp"
#include "gassoc/groupoid.hpp"
#include "gassoc/quiver_io.hpp"
#include "gassoc/verify.hpp"

using nlohmann::json;
using namespace gassoc;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

struct QuiverArgs {
  std::string quiver_file;
  std::string graph;
  std::string orientation = "alternating";
};

struct Globals {
  unsigned jobs = 1;
  bool large = false;
  std::string format = "json";
};

std::size_t rank_cap(const Globals& g) { return g.large ? 8 : kDefaultRankCap; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GASSOC_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("GASSOC_SEED is not an integer: ") + env);
  }
  return kDefaultSeed;
}

void add_quiver_options(CLI::App* cmd, QuiverArgs& args) {
  cmd->add_option("--quiver", args.quiver_file, "Quiver JSON file");
  cmd->add_option("--graph", args.graph, "Dynkin name (A3, D4, E6, A1+A2) or quiver JSON file");
  cmd->add_option("--orientation", args.orientation, "'alternating' or an edge bitmask (bit k reverses edge k)");
}

TreeGraph resolve_graph(const std::string& source) {
  if (source.empty()) throw ParseError("no graph given (use --graph)");
  if (std::filesystem::exists(source)) return load_quiver(source).graph();
  return dynkin_graph(source).underlying();
}

Quiver resolve_quiver(const QuiverArgs& args) {
  if (!args.quiver_file.empty()) return load_quiver(args.quiver_file);
  if (!args.graph.empty() && std::filesystem::exists(args.graph) && args.orientation == "alternating")
    return load_quiver(args.graph);
  const TreeGraph g = resolve_graph(args.graph);
  if (args.orientation == "alternating") return alternating_orientation(g).quiver;
  std::size_t used = 0;
  std::uint64_t mask = 0;
  try {
    mask = std::stoull(args.orientation, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != args.orientation.size() || used == 0)
    throw ParseError("--orientation must be 'alternating' or an integer mask");
  if (g.edges().size() < 64 && mask >> g.edges().size())
    throw DomainError("--orientation mask has bits beyond the " + std::to_string(g.edges().size()) + " edges");
  return Quiver::from_mask(g, mask);
}

RootVector parse_vector(const std::string& text, std::size_t n) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<int> coords;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    coords.push_back(v);
  }
  if (coords.size() != n)
    throw DomainError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(coords.size()));
  return RootVector(coords);
}

json roots_json(const std::vector<RootVector>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(r.coords());
  return out;
}

json big(const mpz_class& v) {
  if (v.fits_ulong_p()) return v.get_ui();
  return v.get_str();
}

std::string join_key(const std::vector<std::size_t>& key) {
  std::string out;
  for (std::size_t k = 0; k < key.size(); ++k) out += (k ? "," : "") + std::to_string(key[k]);
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_csv_rows(const std::vector<std::vector<long>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << row[k];
    std::cout << "\n";
  }
}

// ------------------------------------------------------------------ commands

int cmd_roots(const QuiverArgs& qa, const Globals& gl) {
  const TreeGraph g = resolve_graph(qa.graph.empty() ? qa.quiver_file : qa.graph);
  const RootSystem rs(g);
  if (gl.format == "csv") {
    std::vector<std::vector<long>> rows;
    for (const auto& r : rs.almost_positive()) rows.emplace_back(r.coords().begin(), r.coords().end());
    emit_csv_rows(rows);
    return kOk;
  }
  json out;
  out["graph"] = classify(g).name();
  out["vertices"] = g.vertices();
  out["positive"] = roots_json(rs.positive());
  out["almost_positive"] = roots_json(rs.almost_positive());
  emit(out);
  return kOk;
}

int cmd_compat(const QuiverArgs& qa, const Globals& gl, const std::string& dump_reps) {
  const Quiver q = resolve_quiver(qa);
  require_rank_cap(q.rank(), rank_cap(gl));
  const CompatibilityTable tab(q, gl.jobs);
  const std::size_t n = tab.size();
  std::vector<std::vector<long>> rows(n, std::vector<long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<long>(tab.degree(a, b));

  if (!dump_reps.empty()) {
    json reps = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      const auto& m = tab.indecomposable(a);
      reps.push_back({{"root", tab.roots().almost_positive()[a].coords()},
                      {"plus", representation_to_json(m.plus)},
                      {"minus", m.minus.coords()}});
    }
    std::ofstream out(dump_reps);
    if (!out) throw ParseError("cannot write " + dump_reps);
    out << json{{"quiver", quiver_to_json(q)}, {"representations", reps}}.dump(2) << "\n";
  }

  if (gl.format == "csv") {
    emit_csv_rows(rows);
    return kOk;
  }
  emit({{"quiver", quiver_to_json(q)}, {"roots", roots_json(tab.roots().almost_positive())}, {"degrees", rows}});
  return kOk;
}

int cmd_clusters(const QuiverArgs& qa, const Globals& gl, bool positive_only) {
  const Quiver q = resolve_quiver(qa);
  require_rank_cap(q.rank(), rank_cap(gl));
  const CompatibilityTable tab(q, gl.jobs);
  const auto clusters = positive_only ? positive_clusters(tab) : enumerate_clusters(tab);
  if (gl.format == "csv") {
    std::vector<std::vector<long>> rows;
    for (const auto& c : clusters) rows.emplace_back(c.begin(), c.end());
    emit_csv_rows(rows);
    return kOk;
  }
  json list = json::array();
  for (const auto& c : clusters) {
    json members = json::array();
    for (auto a : c) members.push_back(tab.roots().almost_positive()[a].coords());
    list.push_back(members);
  }
  emit({{"quiver", quiver_to_json(q)}, {"count", clusters.size()}, {"clusters", list}});
  return kOk;
}

int cmd_fan(const QuiverArgs& qa, const Globals& gl, const std::string& out_file, std::size_t samples,
            std::uint64_t seed) {
  const Quiver q = resolve_quiver(qa);
  require_rank_cap(q.rank(), rank_cap(gl));
  const CompatibilityTable tab(q, gl.jobs);
  const auto clusters = enumerate_clusters(tab);
  json fan{{"rank", q.rank()}, {"roots", roots_json(tab.roots().almost_positive())}, {"clusters", clusters}};
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw ParseError("cannot write " + out_file);
    out << fan.dump(2) << "\n";
  }
  const FanReport r = verify_fan(tab, samples, seed);
  json report{{"quiver", quiver_to_json(q)},
              {"clusters", r.clusters},
              {"wrong_size", r.wrong_size},
              {"non_unimodular", r.non_unimodular},
              {"samples", r.samples},
              {"failed_samples", r.failed_samples},
              {"counterexamples", r.counterexamples},
              {"ok", r.ok}};
  if (out_file.empty()) report["fan"] = fan;
  emit(report);
  return r.ok ? kOk : kCheckFailed;
}

int cmd_expand(const QuiverArgs& qa, const Globals& gl, const std::string& gamma_text) {
  const Quiver q = resolve_quiver(qa);
  require_rank_cap(q.rank(), rank_cap(gl));
  const RootVector gamma = parse_vector(gamma_text, q.rank());
  const ClusterExpansion e = cluster_expansion(q, gamma);
  json terms = json::array();
  for (const auto& [root, m] : e.terms) terms.push_back({{"root", root.coords()}, {"multiplicity", m}});
  emit({{"quiver", quiver_to_json(q)}, {"gamma", gamma.coords()}, {"terms", terms}});
  return kOk;
}

int cmd_sigma(const QuiverArgs& qa, const std::string& gamma_text, const std::string& word_text) {
  const TreeGraph g = resolve_graph(qa.graph.empty() ? qa.quiver_file : qa.graph);
  const RootVector gamma = parse_vector(gamma_text, g.size());
  const Word w = parse_word(alternating_orientation(g).quiver, word_text);
  RootVector v = gamma;
  json steps = json::array();
  for (const auto& l : w.letters) {
    if (l.is_dual()) continue;
    v = sigma(g, l.vertex, v);
    steps.push_back({{"vertex", l.vertex}, {"value", v.coords()}});
  }
  emit({{"gamma", gamma.coords()}, {"word", to_string(w)}, {"steps", steps}, {"result", v.coords()}});
  return kOk;
}

int cmd_groupoid(const QuiverArgs& qa, std::size_t max_len, std::size_t dual_max_len, const std::string& check) {
  const TreeGraph g = resolve_graph(qa.graph.empty() ? qa.quiver_file : qa.graph);
  const std::size_t len = max_len ? max_len : default_loop_bound(g);
  json out{{"vertices", g.vertices()}, {"check", check}, {"max_len", len}};
  bool ok = true;
  if (check == "loops") {
    const LoopReport r = classify_loops(g, len, std::min(len, dual_max_len));
    json by_k = json::object(), by_len = json::object(), by_m = json::object();
    for (const auto& [k, c] : r.loops_by_k) by_k[join_key(k)] = big(c);
    for (const auto& [l, c] : r.loops_by_length) by_len[std::to_string(l)] = big(c);
    for (const auto& [m, c] : r.dual_loops_by_m) by_m[join_key(m)] = big(c);
    out["dual_max_len"] = r.dual_max_len;
    out["loops_by_k"] = by_k;
    out["loops_by_length"] = by_len;
    out["dual_loops_by_m"] = by_m;
    out["normal_forms"] = r.classes;
    out["violations"] = r.violations;
    ok = r.ok();
  } else {
    const LemmaReport r = check_lemmas(g, max_len ? max_len : 10);
    out["max_len"] = r.max_len;
    out["words"] = r.words;
    out["reduced"] = r.reduced;
    out["extremal_checked"] = r.extremal_checked;
    out["loops_checked"] = r.loops_checked;
    out["failures"] = r.failures;
    out["violations"] = r.violations;
    ok = r.ok();
  }
  emit(out);
  return ok ? kOk : kCheckFailed;
}

int cmd_census(const QuiverArgs& qa, const Globals& gl, bool all_orientations) {
  const Quiver q = resolve_quiver(qa);
  require_rank_cap(q.rank(), rank_cap(gl));
  json orientations = json::array();
  bool invariant = true;
  FVector top;
  if (all_orientations) {
    const InvarianceReport r = orientation_invariance(q.graph(), rank_cap(gl), gl.jobs);
    for (const auto& o : r.orientations)
      orientations.push_back({{"quiver", o.quiver.to_string()}, {"f_plus", o.f_plus}, {"clusters", o.clusters}});
    invariant = r.invariant;
    top = r.common;
  } else {
    const CompatibilityTable tab(q, gl.jobs);
    top = f_plus_vector(tab);
    orientations.push_back(
        {{"quiver", q.to_string()}, {"f_plus", top}, {"clusters", enumerate_clusters(tab).size()}});
  }
  json formula = nullptr;
  bool matches = true;
  const DynkinGraph dg = classify(q.graph());
  if (dg.irreducible()) {
    const auto value = positive_cluster_count(dg);
    formula = value;
    matches = !top.empty() && top.size() == q.rank() + 1 && top.back() == value;
  }
  emit({{"graph", dg.name()},
        {"orientations", orientations},
        {"invariant", invariant},
        {"formula_value", formula},
        {"formula_matches", matches}});
  return invariant && matches ? kOk : kCheckFailed;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::string s = item;
    for (char& ch : s)
      if (ch == ',') ch = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
  }
  return out;
}

int cmd_verify(VerifyConfig config, const std::vector<std::string>& graphs, const std::vector<std::string>& checks,
               const std::vector<std::string>& exponents) {
  if (!graphs.empty()) config.graphs = split_list(graphs);
  config.checks = split_list(checks);
  for (const auto& entry : exponents) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw ParseError("--exponents expects NAME=e1,e2,...");
    const std::string name = entry.substr(0, eq);
    const DynkinGraph dg = dynkin_graph(name);
    config.exponents[name] = parse_vector(entry.substr(eq + 1), dg.rank()).coords();
  }
  const VerificationReport report = run_verify_suite(config);
  json checks_json = json::array();
  for (const auto& c : report.checks) {
    json entry{{"group", c.group},   {"name", c.name},         {"scope", c.scope}, {"status", to_string(c.status)},
               {"cases", c.cases},   {"failures", c.failures}, {"detail", c.detail}};
    if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
    checks_json.push_back(entry);
    std::cerr << to_string(c.status) << "  " << c.group << "/" << c.name << " [" << c.scope << "] " << c.cases
              << " cases, " << c.seconds << " s" << (c.counterexample.empty() ? "" : "  " + c.counterexample)
              << "\n";
  }
  emit({{"seed", config.seed}, {"graphs", config.graphs}, {"checks", checks_json}, {"ok", report.ok()}});
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized associahedra via decorated quiver representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--jobs", gl.jobs, "Worker threads for parallel enumerations")->check(CLI::PositiveNumber);
  app.add_flag("--large", gl.large, "Allow rank 7 and 8 (E7, E8)");
  app.add_option("--format", gl.format, "Output format for tables")->check(CLI::IsMember({"json", "csv"}));

  QuiverArgs qa;
  std::string dump_reps, out_file, gamma, word, check = "loops";
  bool positive_only = false, all_orientations = false;
  std::size_t samples = 1000, max_len = 0, dual_max_len = 8;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* roots = app.add_subcommand("roots", "Positive and almost positive roots");
  add_quiver_options(roots, qa);
  auto* compat = app.add_subcommand("compat", "Compatibility degree matrix");
  add_quiver_options(compat, qa);
  compat->add_option("--dump-reps", dump_reps, "Write the decorated indecomposables to a JSON file");
  auto* clusters = app.add_subcommand("clusters", "Enumerate clusters");
  add_quiver_options(clusters, qa);
  clusters->add_flag("--positive", positive_only, "Only clusters without negative simple roots");
  auto* fan = app.add_subcommand("fan", "Export and check the cluster fan");
  add_quiver_options(fan, qa);
  fan->add_option("--out", out_file, "Fan JSON output file");
  fan->add_option("--samples", samples, "Random vectors for the completeness check");
  fan->add_option("--seed", seed, "Sampling seed")->each([&](const std::string&) { seed_given = true; });
  auto* expand = app.add_subcommand("expand", "Cluster expansion of a lattice vector");
  add_quiver_options(expand, qa);
  expand->add_option("--gamma", gamma, "Comma-separated coordinates")->required();
  auto* sig = app.add_subcommand("sigma", "Apply a word of sigma_i (vertex ids) and tau_+/- (+, -) to a vector");
  add_quiver_options(sig, qa);
  sig->add_option("--gamma", gamma, "Comma-separated coordinates")->required();
  sig->add_option("--word", word, "Letters applied left to right, e.g. '1,3,+,-'")->required();
  auto* grp = app.add_subcommand("groupoid", "Bounded checks in the reflection groupoid");
  add_quiver_options(grp, qa);
  grp->add_option("--max-len", max_len, "Word length bound (default 2n(n+1) for loops, 10 for lemmas)");
  grp->add_option("--dual-max-len", dual_max_len, "Word length bound when D is allowed");
  grp->add_option("--check", check, "loops or lemmas")->check(CLI::IsMember({"loops", "lemmas"}));
  auto* census = app.add_subcommand("census", "Ext-free set counts and the product formula");
  add_quiver_options(census, qa);
  census->add_flag("--all-orientations", all_orientations, "Compare every orientation of the graph");

  VerifyConfig vc;
  std::vector<std::string> v_graphs, v_checks, v_exponents;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--graph", v_graphs, "Graphs in scope (repeatable or comma separated)");
  verify->add_option("--checks", v_checks, "Groups or check names (repeatable or comma separated)");
  verify->add_option("--seed", seed, "Seed for all sampling")->each([&](const std::string&) { seed_given = true; });
  verify->add_option("--samples", vc.fan_samples, "Random vectors per fan check");
  verify->add_option("--random-sums", vc.random_sums, "Random direct sums per graph");
  verify->add_option("--loop-max-len", vc.loop_max_len, "Loop length bound (0 = 2n(n+1))");
  verify->add_option("--lemma-max-len", vc.lemma_max_len, "Word length bound for the lemma checks");
  verify->add_option("--exponents", v_exponents, "Replace an exponent table, e.g. A3=1,1,4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::uint64_t effective_seed = seed_given ? seed : default_seed();
    if (*roots) return cmd_roots(qa, gl);
    if (*compat) return cmd_compat(qa, gl, dump_reps);
    if (*clusters) return cmd_clusters(qa, gl, positive_only);
    if (*fan) return cmd_fan(qa, gl, out_file, samples, effective_seed);
    if (*expand) return cmd_expand(qa, gl, gamma);
    if (*sig) return cmd_sigma(qa, gamma, word);
    if (*grp) return cmd_groupoid(qa, max_len, dual_max_len, check);
    if (*census) return cmd_census(qa, gl, all_orientations);
    if (*verify) {
      vc.seed = effective_seed;
      vc.jobs = gl.jobs;
      vc.large = gl.large;
      return cmd_verify(vc, v_graphs, v_checks, v_exponents);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
