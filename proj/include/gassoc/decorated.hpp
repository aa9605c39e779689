#pragma once

#include <cstddef>
#include <vector>

#include "gassoc/representation.hpp"

namespace gassoc {

/// M = M+ (+) V. Only the dimensions of the decoration V are stored: the
/// phantom vertices i- carry no arrows, so nothing in scope depends on the
/// maps between decorations.
struct DecoratedRep {
  Representation plus;
  RootVector minus;  // dim V_i by vertex position

  DecoratedRep() = default;
  DecoratedRep(Representation plus, RootVector minus);

  const Quiver& quiver() const { return plus.quiver(); }
  /// E_i^-: zero representation, one-dimensional decoration at i.
  static DecoratedRep simple_minus(const Quiver& q, Vertex i);
  static DecoratedRep undecorated(Representation plus);
};

DecoratedRep direct_sum(const DecoratedRep& a, const DecoratedRep& b);

/// dim M+ - dim V.
RootVector sdim(const DecoratedRep& m);

/// U_alpha for alpha in Phi_{>=-1}: the indecomposable for a positive root,
/// E_i^- for -alpha_i. Throws DomainError otherwise.
DecoratedRep decorated_of_root(const Quiver& q, const RootVector& alpha);

/// dim E(M, N) = ext(M+,N+) + ext(N+,M+) + sum_i dim M+_i dim W_i
///             + sum_i dim V_i dim N+_i.
std::size_t e_dim(const DecoratedRep& m, const DecoratedRep& n);

/// (alpha || beta) = e_dim(U_alpha, U_beta).
std::size_t compatibility_degree(const Quiver& q, const RootVector& alpha, const RootVector& beta);

/// Sigma_i. At a source: M_i becomes Coker(M_i -> sum M_j) (+) V_i and V_i
/// becomes Ker of the same map. At a sink: D Sigma_i D.
DecoratedRep extended_reflect(const DecoratedRep& m, Vertex i);

/// D: transpose every map, reverse arrows, keep decorations.
DecoratedRep dualize(const DecoratedRep& m);

/// Piecewise-linear involution on the root lattice:
/// [sigma_i g : a_i] = -g_i + sum_{k -- i} max(g_k, 0), other coordinates fixed.
RootVector sigma(const TreeGraph& graph, Vertex i, const RootVector& gamma);

enum class Sign { Plus, Minus };

/// tau_+ (resp. tau_-) is the product of sigma_i over I+ (resp. I-) of the
/// alternating decomposition of the graph.
RootVector tau(const TreeGraph& graph, Sign sign, const RootVector& gamma);

/// Krull-Schmidt invariants of a decorated representation.
struct DecoratedIsoclass {
  RootMultiset plus;
  RootVector minus;
  friend bool operator==(const DecoratedIsoclass&, const DecoratedIsoclass&) = default;
};

DecoratedIsoclass isoclass(const DecoratedRep& m, const IndecomposableCatalog& catalog);

/// Compatibility degrees between all pairs in Phi_{>=-1}, indexed like
/// RootSystem::almost_positive().
class CompatibilityTable {
 public:
  explicit CompatibilityTable(const Quiver& q, unsigned jobs = 1);

  const Quiver& quiver() const { return quiver_; }
  const RootSystem& roots() const { return roots_; }
  std::size_t size() const { return roots_.almost_positive().size(); }
  std::size_t rank() const { return quiver_.rank(); }

  std::size_t degree(std::size_t a, std::size_t b) const { return degree_[a * size() + b]; }
  std::size_t degree(const RootVector& a, const RootVector& b) const;
  bool compatible(std::size_t a, std::size_t b) const { return degree(a, b) == 0; }

  const DecoratedRep& indecomposable(std::size_t a) const { return reps_[a]; }
  std::size_t index(const RootVector& a) const;

 private:
  Quiver quiver_;
  RootSystem roots_;
  std::vector<DecoratedRep> reps_;
  std::vector<std::size_t> degree_;
};

}  // namespace gassoc
