#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gassoc/clusters.hpp"

namespace gassoc {

struct VerifyConfig {
  /// Dynkin names ("A3", "D4", "A1+A2", ...); every check runs over all
  /// orientations of each graph.
  std::vector<std::string> graphs{"A1", "A2", "A3", "A4", "D4"};
  /// Group names (rep, decorated, clusters, groupoid, census) or check
  /// names; empty selects everything.
  std::vector<std::string> checks;
  std::uint64_t seed = kDefaultSeed;
  std::size_t fan_samples = 1000;
  std::size_t random_sums = 200;
  /// 0 means default_loop_bound(graph).
  std::size_t loop_max_len = 0;
  std::size_t dual_loop_max_len = 8;
  std::size_t lemma_max_len = 10;
  unsigned jobs = 1;
  bool large = false;
  /// Replacement exponent tables by graph name, for fault injection.
  std::map<std::string, std::vector<int>> exponents;
};

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string group;
  std::string name;
  std::string scope;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;     // individual assertions evaluated
  std::size_t failures = 0;
  std::string detail;
  std::string counterexample;  // first failure, if any
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Names of all checks, grouped, in execution order.
const std::vector<std::pair<std::string, std::vector<std::string>>>& verify_catalog();

/// Runs the selected checks in catalog order, graph by graph. Deterministic
/// for a fixed config apart from the timings. Throws DomainError for unknown
/// check or graph names and ResourceError for graphs above the rank cap.
VerificationReport run_verify_suite(const VerifyConfig& config);

}  // namespace gassoc
