#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gassoc/quiver.hpp"
#include "gassoc/roots.hpp"

namespace gassoc {

/// A generator of the reflection groupoid: Sigma_i or the duality D.
struct Letter {
  enum class Kind { Sigma, Dual };
  Kind kind = Kind::Sigma;
  Vertex vertex = 0;

  static Letter sigma(Vertex v) { return {Kind::Sigma, v}; }
  static Letter dual() { return {Kind::Dual, 0}; }
  bool is_dual() const { return kind == Kind::Dual; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& l);  // "3" or "D"

/// Letters are applied left to right starting from `start`.
struct Word {
  Quiver start;
  std::vector<Letter> letters;
};

Word sigma_word(const Quiver& start, const std::vector<Vertex>& vertices);

/// Comma or space separated tokens: a vertex id, "D", or "+" / "-" for the
/// letters of I+ / I- of the alternating decomposition (ascending).
Word parse_word(const Quiver& start, const std::string& text);

std::string to_string(const Word& w);

/// End orientation. Throws AdmissibilityError naming the first letter that
/// is not a source or sink of the orientation it is applied to.
Quiver apply_word(const Word& w);

/// Canonical form modulo R1-R4: the parity of D letters and the
/// Cartier-Foata normal form of the reduced Sigma part.
struct NormalForm {
  bool dual = false;
  /// Foata steps; each step lists pairwise unlinked vertices, ascending.
  std::vector<std::vector<Vertex>> steps;

  std::size_t length() const;
  std::vector<Vertex> letters() const;
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const Word& w);

/// Between any two occurrences of i some j linked to i occurs.
/// Throws DomainError for words containing D.
bool is_reduced(const Word& w);

/// Between consecutive occurrences of i, each j linked to i occurs exactly
/// once. Throws DomainError unless w is a reduced Dual-free word.
bool check_inbetween(const Word& w);

/// For a reduced Dual-free word ending at the alternating orientation or its
/// opposite: every used i has either no neighbour applied after its last
/// occurrence, or each neighbour exactly once. Words are in application
/// order, so "after the last occurrence" is "before the first" in
/// composition notation. Throws DomainError if the preconditions fail.
bool check_extremal(const Word& w);

/// 2 n (n + 1).
std::size_t default_loop_bound(const TreeGraph& g);

/// Loop counts are over words, so they can exceed 64 bits for long bounds.
struct LoopReport {
  std::size_t max_len = 0;
  std::size_t dual_max_len = 0;
  /// Dual-free loops at the alternating orientation keyed by the exponent k
  /// of (S+ S-)^k or (S- S+)^k, one entry per connected component.
  std::map<std::vector<std::size_t>, mpz_class> loops_by_k;
  std::map<std::size_t, mpz_class> loops_by_length;
  /// Loops with D allowed, keyed by the number of T-blocks per component.
  std::map<std::vector<std::size_t>, mpz_class> dual_loops_by_m;
  std::size_t classes = 0;
  std::size_t dual_classes = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Enumerates every applicable word of length <= max_len from the
/// alternating orientation, grouped by normal form, and checks that each
/// loop normalises to an alternating power (per component on forests). The
/// same is done with D allowed up to dual_max_len against products of
/// T+ = D S+ and T- = D S-.
LoopReport classify_loops(const TreeGraph& g, std::size_t max_len, std::size_t dual_max_len);

struct LemmaReport {
  std::size_t max_len = 0;
  std::uint64_t words = 0;
  std::uint64_t reduced = 0;
  std::uint64_t extremal_checked = 0;
  std::uint64_t loops_checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> violations;  // first few counterexamples
  bool ok() const { return failures == 0; }
};

/// Exhaustive over all start orientations and all applicable Dual-free words
/// of length <= max_len: reduced criterion against normal-form length, the
/// in-between lemma on reduced words, the extremal lemma on reduced words
/// ending at the alternating orientation or its opposite, and the
/// all-vertices lemma on reduced nonempty loops (per component).
LemmaReport check_lemmas(const TreeGraph& g, std::size_t max_len);

/// Both sides of every realisable instance of R1-R4 reach the same
/// orientation and, on ADE graphs, act identically on roots.
std::vector<std::string> check_relation_soundness(const TreeGraph& g);

/// Images of Phi_{>=-1} (in root order) under the composite of sigma_i for
/// each Sigma(i) and the identity for D. Throws UnsupportedGraphError on
/// non-Dynkin graphs and InvariantViolation if the result is not a
/// permutation.
std::vector<RootVector> word_action_on_roots(const Word& w);

}  // namespace gassoc
