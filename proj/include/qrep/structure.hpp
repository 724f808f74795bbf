#pragma once

#include "qrep/intertwiner.hpp"
#include "qrep/representation.hpp"

#include <optional>
#include <vector>

namespace qrep {

/// Subalgebra of M_n(C), n = ambient, given by a linear basis.
struct AlgebraBasis {
  Index ambient = 0;
  std::vector<Matrix> basis;

  Index dimension() const { return static_cast<Index>(basis.size()); }
};

/// End(rep) as block-diagonal matrices acting on the direct sum of vertex spaces.
AlgebraBasis end_algebra(const Representation& rep, const HomBasis& end_basis);

/// Jacobson radical of a matrix algebra over C, computed as the kernel of the
/// trace form (x, y) -> tr(xy) on the basis. Columns of `coefficients`
/// express radical elements in the algebra basis.
struct RadicalInfo {
  Index dimension = 0;
  Matrix coefficients;
  RankInfo rank;
};
RadicalInfo jacobson_radical(const AlgebraBasis& algebra, const Tolerances& tol = {});

struct IndecomposabilityResult {
  bool indecomposable = false;
  Index end_dim = 0;
  Index radical_dim = 0;
  RankInfo end_rank;
  RankInfo radical_rank;
  /// Nontrivial idempotent endomorphism, per vertex, when decomposable.
  std::optional<VertexTuple> idempotent;
  double idempotent_defect = 0.0;  // ||P^2 - P|| / ||P||
  double spectral_separation = 0.0;
  int tries = 0;
  std::uint64_t seed = 0;

  Index semisimple_dim() const { return end_dim - radical_dim; }
};

/// Indecomposable iff End(rep) is local, i.e. dim End / rad End = 1.
/// Throws ValidationError for the zero representation.
IndecomposabilityResult is_indecomposable(const Representation& rep, const Tolerances& tol = {});

/// End(rep) = C I.
bool is_transitive(const Representation& rep, const Tolerances& tol = {});

struct SimplicityResult {
  bool simple = false;
  Index algebra_dim = 0;  // dimension of the generated algebra
  Index full_dim = 0;     // (sum of vertex dimensions)^2
  /// Graded inclusions of a proper nonzero subrepresentation, when not simple.
  std::optional<VertexTuple> witness;
  std::optional<Representation> witness_rep;
};

/// Unital algebra generated by the vertex idempotents and the arrow maps
/// (extended by zero) inside M_D(C), D = total dimension.
AlgebraBasis generated_algebra(const Representation& rep, const Tolerances& tol = {});

/// Simple iff the generated algebra is all of M_D(C).
SimplicityResult is_simple(const Representation& rep, const Tolerances& tol = {});

/// One vertex of dimension one, all others zero, all maps zero.
bool is_canonically_simple(const Representation& rep);

struct IrreducibilityResult {
  bool irreducible = false;
  Index star_dim = 0;  // dim {T in End : T* in End}
  Index end_dim = 0;
};

/// Irreducible iff the *-closed part of End is C I.
IrreducibilityResult is_irreducible(const Representation& rep, const Tolerances& tol = {});

/// Binary splitting tree along idempotent endomorphisms.
struct DecompositionTree {
  Representation rep;
  Index end_dim = 0;
  Index radical_dim = 0;
  /// Empty for leaves. Otherwise the idempotent used and, per child, the
  /// per-vertex inclusion of the child into this node's spaces.
  std::optional<VertexTuple> idempotent;
  std::vector<VertexTuple> inclusions;
  std::vector<DecompositionTree> children;

  bool is_leaf() const { return children.empty(); }
  std::vector<Representation> leaves() const;
  /// Direct sum of the leaves, in depth-first order.
  Representation reassemble() const;
};

DecompositionTree decompose(const Representation& rep, const Tolerances& tol = {});

struct StrongIrreducibilityResult {
  bool strongly_irreducible = false;
  bool single_jordan_block = false;  // direct criterion
  bool indecomposable = false;       // via the one-loop representation
  Index commutant_dim = 0;
  Index geometric_multiplicity = 0;
};

/// Cross-checks the one-loop indecomposability test against the
/// single-Jordan-block criterion; throws NumericalError when they disagree.
StrongIrreducibilityResult is_strongly_irreducible(const Matrix& a, const Tolerances& tol = {});

/// Single-Jordan-block test on its own: A - (tr A / n) I is nilpotent and has
/// rank n - 1.
bool is_single_jordan_block(const Matrix& a, const Tolerances& tol = {},
                            Index* geometric_multiplicity = nullptr);

}  // namespace qrep
