#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gassoc/decorated.hpp"

namespace gassoc {

/// Sets of almost positive roots, by index into RootSystem::almost_positive().
/// E8 has 128 positive roots, so 256 bits cover every supported case.
using RootBits = std::bitset<256>;
using RootIndexSet = std::vector<std::size_t>;

/// Adjacency of the compatibility graph: neighbours(a) = {b != a : (a||b) = 0}.
std::vector<RootBits> compatibility_graph(const CompatibilityTable& table);

bool is_compatible_set(const CompatibilityTable& table, const RootIndexSet& set);

/// S(C) = {i : -alpha_i in C}, as vertex ids.
std::vector<Vertex> negative_support(const CompatibilityTable& table, const RootIndexSet& set);

/// All maximal compatible subsets of Phi_{>=-1} (Bron-Kerbosch with pivoting),
/// members ascending, list sorted lexicographically.
std::vector<RootIndexSet> enumerate_clusters(const CompatibilityTable& table);

/// Clusters with empty negative support.
std::vector<RootIndexSet> positive_clusters(const CompatibilityTable& table);

/// Maximal Ext-free sets of indecomposables, computed from Ext^1 between the
/// representations directly (no compatibility table). Indices refer to
/// positive roots, i.e. the same indices as in the table.
std::vector<RootIndexSet> maximal_ext_free_sets(const Quiver& q);

/// Integer matrix with the set's roots as columns.
long root_matrix_determinant(const CompatibilityTable& table, const RootIndexSet& set);

struct ClusterExpansion {
  RootVector target;
  /// (root, multiplicity >= 1), in global root order.
  std::vector<std::pair<RootVector, int>> terms;
};

/// Cluster cones with their inverse root matrices, for repeated expansion.
class ClusterFan {
 public:
  explicit ClusterFan(const CompatibilityTable& table);
  ClusterFan(const CompatibilityTable& table, std::vector<RootIndexSet> clusters);

  const CompatibilityTable& table() const { return *table_; }
  const std::vector<RootIndexSet>& clusters() const { return clusters_; }

  /// The unique nonnegative expansion of gamma over a compatible set, found
  /// by testing every cone. Throws InvariantViolation if no cone contains
  /// gamma or if two accepting cones disagree on the support.
  ClusterExpansion expand(const RootVector& gamma) const;

 private:
  const CompatibilityTable* table_;
  std::vector<RootIndexSet> clusters_;
  std::vector<Matrix> inverses_;  // empty matrix for singular root sets
};

ClusterExpansion cluster_expansion(const Quiver& q, const RootVector& gamma);

struct FanReport {
  bool ok = true;
  std::size_t clusters = 0;
  std::size_t wrong_size = 0;
  std::size_t non_unimodular = 0;
  std::size_t samples = 0;
  std::size_t failed_samples = 0;
  std::vector<std::string> counterexamples;
};

/// Smoothness, purity and completeness of the fan: every cluster has rank
/// elements and determinant +-1, and `samples` seeded random vectors in
/// [-10,10]^n each expand uniquely.
FanReport verify_fan(const CompatibilityTable& table, std::size_t samples, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

}  // namespace gassoc
