#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gassoc/matrix.hpp"
#include "gassoc/quiver.hpp"
#include "gassoc/roots.hpp"

namespace gassoc {

/// A finite-dimensional representation over exact rationals. The map on
/// arrow k : i -> j is a (dim_j x dim_i) matrix.
class Representation {
 public:
  Representation() = default;
  Representation(Quiver quiver, RootVector dims, std::vector<Matrix> maps);

  static Representation zero(const Quiver& q);
  /// The simple E_i.
  static Representation simple(const Quiver& q, Vertex i);

  const Quiver& quiver() const { return quiver_; }
  const RootVector& dims() const { return dims_; }
  int dim_at(Vertex v) const { return dims_[quiver_.graph().index_of(v)]; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  bool is_zero() const { return dims_.is_zero(); }

 private:
  Quiver quiver_;
  RootVector dims_;
  std::vector<Matrix> maps_;
};

Representation direct_sum(const Representation& a, const Representation& b);

/// Transposes every map; the result lives over the opposite quiver.
Representation dual(const Representation& m);

/// dim Hom(M, N), as the nullity of the linear system f_j M_a = N_a f_i.
std::size_t hom_dim(const Representation& m, const Representation& n);

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
std::size_t ext_dim(const Representation& m, const Representation& n);

/// The stacked map at i: out of i for a source (sum_j M_j rows), into i for a
/// sink (sum_j M_j columns). Blocks follow ascending arrow index.
Matrix stacked_map_at(const Representation& m, Vertex i);

/// BGP reflection at a source (cokernel form) or sink (kernel form).
/// Result lives over reflect_orientation(quiver, i).
Representation classical_reflect(const Representation& m, Vertex i);

/// Indecomposable with dimension vector alpha (a positive root). Built by
/// reflecting alpha at sinks down to a simple root, then pulling E_i back
/// through source reflections.
Representation indecomposable_rep(const Quiver& q, const RootVector& alpha);

/// Multiplicity of each indecomposable summand, keyed by dimension vector.
using RootMultiset = std::map<RootVector, int>;

/// All indecomposables of a Dynkin quiver together with the Hom-order used
/// for Krull-Schmidt decomposition.
class IndecomposableCatalog {
 public:
  explicit IndecomposableCatalog(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  const RootSystem& roots() const { return roots_; }
  /// Indexed like roots().positive().
  const std::vector<Representation>& reps() const { return reps_; }
  const Representation& rep(const RootVector& alpha) const;
  /// hom(a, b) = dim Hom(M_a, M_b), positive-root indices.
  std::size_t hom(std::size_t a, std::size_t b) const { return hom_[a * reps_.size() + b]; }
  /// Positive-root indices sorted so nonzero Hom only runs earlier -> later.
  const std::vector<std::size_t>& hom_order() const { return order_; }

  RootMultiset decompose(const Representation& m) const;

 private:
  Quiver quiver_;
  RootSystem roots_;
  std::vector<Representation> reps_;
  std::vector<std::size_t> hom_;
  std::vector<std::size_t> order_;
};

/// Krull-Schmidt multiplicities from Hom dimensions into every indecomposable.
RootMultiset decompose(const Representation& m);

}  // namespace gassoc
