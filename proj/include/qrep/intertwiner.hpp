#pragma once

#include "qrep/linalg.hpp"
#include "qrep/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrep {

/// Orthonormal basis of Hom((H,f),(K,g)).
///
/// Each element is a vertex tuple T with T_v of shape dim_K(v) x dim_H(v)
/// satisfying T_{r(a)} f_a = g_a T_{s(a)} for every arrow a. Orthonormality
/// is with respect to the entrywise inner product summed over vertices.
struct HomBasis {
  std::vector<VertexTuple> basis;
  RankInfo rank;              // rank decision of the stacked constraint system
  double tolerance = 0.0;     // residual bound tau_hom * scale actually enforced
  double max_residual = 0.0;  // worst residual over the basis

  Index dimension() const { return static_cast<Index>(basis.size()); }
};

/// max over arrows of ||T_{r(a)} f_a - g_a T_{s(a)}||_F.
double intertwining_residual(const Representation& from, const Representation& to,
                             const VertexTuple& t);

/// Stacked linear constraints on the column-major vectorized unknowns
/// (T_v in vertex order). Exposed for diagnostics and tests.
Matrix intertwining_system(const Representation& from, const Representation& to);

/// Throws SizeLimitError when the unknown count exceeds tol.size_limit, and
/// NumericalError if any basis element violates the residual bound.
HomBasis hom(const Representation& from, const Representation& to, const Tolerances& tol = {});

/// hom(rep, rep).
HomBasis end(const Representation& rep, const Tolerances& tol = {});

enum class IsoVerdict { yes, no, probably_no };

std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::no;
  std::optional<VertexTuple> witness;  // set when verdict == yes
  std::string reason;
  Index hom_dimension = 0;
  int samples_tried = 0;
  std::uint64_t seed = 0;
};

/// Random linear combinations of the hom basis are tested for invertibility
/// at every vertex. `probably_no` is reported when Hom is nonzero but no
/// sample is invertible.
IsoResult are_isomorphic(const Representation& a, const Representation& b,
                         const Tolerances& tol = {});

/// Hom vanishes in both directions.
bool relatively_prime(const Representation& a, const Representation& b,
                      const Tolerances& tol = {});

/// sum_i c_i * basis_i.
VertexTuple combine(const std::vector<VertexTuple>& basis, const std::vector<Complex>& coeffs);

}  // namespace qrep
