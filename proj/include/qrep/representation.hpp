#pragma once

#include "qrep/numeric.hpp"
#include "qrep/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

/// Complex dimension per vertex, keyed by vertex name.
using DimensionVector = std::map<std::string, Index>;

/// Finite-dimensional representation: a space C^{d_v} per vertex and a
/// d_{target} x d_{source} matrix per arrow. Immutable once built.
class Representation {
 public:
  /// `dims` and `maps` follow the quiver's vertex and arrow order.
  Representation(Quiver quiver, std::vector<Index> dims, std::vector<Matrix> maps);

  /// All maps zero.
  static Representation zero(const Quiver& quiver, std::vector<Index> dims);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Index>& dims() const { return dims_; }
  Index dim(std::size_t vertex) const { return dims_[vertex]; }
  Index dim(std::string_view vertex) const { return dims_[quiver_.vertex_index(vertex)]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const Matrix& map(std::string_view arrow) const { return maps_[quiver_.arrow_index(arrow)]; }

  DimensionVector dimension_vector() const;
  Index total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Offset of each vertex block inside the direct sum of all vertex spaces.
  std::vector<Index> offsets() const;

  /// Largest Frobenius norm over arrow matrices.
  double scale() const;

  /// Arrow map placed at block (target, source) of a total_dim() square matrix.
  Matrix embedded_map(std::size_t arrow) const;

 private:
  Quiver quiver_;
  std::vector<Index> dims_;
  std::vector<Matrix> maps_;
};

/// Block-diagonal sum; a's block comes first at every vertex.
Representation direct_sum(const Representation& a, const Representation& b);

/// Representation on the subspaces spanned by `inclusions[v]` (one d_v x k_v
/// matrix per vertex, full column rank). Each restricted map g solves
/// f * incl_s = incl_r * g in the least-squares sense; the residual must not
/// exceed tau_range (relative to max|f| * max|incl_s|, or the absolute
/// override when given).
Representation restrict_to(const Representation& rep, const VertexTuple& inclusions,
                           const Tolerances& tol = {},
                           std::optional<double> absolute_tolerance = std::nullopt);

/// C at v0, zero elsewhere, all maps zero.
Representation canonically_simple(const Quiver& quiver, std::string_view vertex);

/// Equal dimension vectors over the same quiver (necessary for isomorphism).
bool is_isomorphism_compatible(const Representation& a, const Representation& b);

/// Applies phi_v (invertible, per vertex) as a change of basis:
/// f_a -> phi_{target} f_a phi_{source}^{-1}.
Representation change_basis(const Representation& rep, const VertexTuple& phi);

/// L_n representation with the given square maps as loops a1..an.
Representation loop_representation(const std::vector<Matrix>& maps);

/// K_n representation (arrows a1..an : 1 -> 2) with the given equally shaped maps.
Representation kronecker_representation(const std::vector<Matrix>& maps);

void require_same_quiver(const Representation& a, const Representation& b);

}  // namespace qrep
