#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gassoc/clusters.hpp"

namespace gassoc {

/// Entry k counts faces (compatible sets) of cardinality k; entry 0 is 1.
using FVector = std::vector<std::uint64_t>;

/// Ranks above this need an explicit opt-in (E7, E8).
inline constexpr std::size_t kDefaultRankCap = 6;

void require_rank_cap(std::size_t rank, std::size_t cap);

/// Number of cliques of each size in a graph restricted to `allowed`.
FVector count_cliques(const std::vector<RootBits>& adj, const RootBits& allowed);

/// Positive compatible sets (Ext-free sets of indecomposables) by size.
FVector f_plus_vector(const CompatibilityTable& table);
FVector f_plus_vector(const Quiver& q, std::size_t rank_cap = kDefaultRankCap);

/// Compatible subsets of Phi(J)_{>=-1} under the induced orientation.
FVector full_f_vector(const Quiver& q, const std::vector<Vertex>& subset, std::size_t rank_cap = kDefaultRankCap);

struct MoebiusReport {
  std::size_t relations = 0;   // (k, J) pairs checked
  std::size_t inversions = 0;  // f+ values recovered by inversion
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// f(k, J) = sum_{K in J, |K| <= k} f+(k - |K|, J - K) for every (k, J), and
/// f+ recovered from f by Moebius inversion on the poset
/// (l, K) <= (k, J) iff K in J and k - l = |J - K|. The Moebius function is
/// computed from its recursive definition and compared with (-1)^{|J - K|}.
MoebiusReport moebius_consistency(const Quiver& q, std::size_t rank_cap = kDefaultRankCap);

struct OrientationFVector {
  Quiver quiver;
  FVector f_plus;
  std::uint64_t clusters = 0;  // all clusters, for the total-count invariance
};

struct InvarianceReport {
  std::vector<OrientationFVector> orientations;
  FVector common;  // f+ of the first orientation
  bool invariant = true;
};

InvarianceReport orientation_invariance(const TreeGraph& graph, std::size_t rank_cap = kDefaultRankCap,
                                        unsigned jobs = 1);

/// prod_i (e_i + h - 1) / (e_i + 1) over the stored exponent table.
/// DomainError for reducible graphs; InvariantViolation if not an integer.
std::uint64_t positive_cluster_count(const DynkinGraph& graph);

/// The simplicial complex of positive compatible sets.
struct PositiveComplex {
  std::vector<RootVector> vertices;       // positive roots in root order
  std::vector<RootBits> adjacency;        // 1-skeleton
  std::vector<RootIndexSet> facets;       // maximal faces
  FVector f;                              // f[k] = faces with k vertices

  std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
  bool has_edge(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
};

PositiveComplex positive_complex(const CompatibilityTable& table);

/// Isomorphism of the positive complexes of two orientations of the same
/// graph, by backtracking over vertex bijections with degree pruning and a
/// final comparison of all faces. Rank is capped at 4.
bool complex_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace gassoc
