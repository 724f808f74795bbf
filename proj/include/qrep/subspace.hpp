#pragma once

#include "qrep/numeric.hpp"
#include "qrep/representation.hpp"
#include "qrep/structure.hpp"

#include <vector>

namespace qrep {

/// A system of n subspaces of C^d, each stored as an orthonormal inclusion.
class SubspaceSystem {
 public:
  /// Orthonormalizes each inclusion; rank-deficient inclusions are rejected.
  SubspaceSystem(Index ambient, std::vector<Matrix> inclusions, const Tolerances& tol = {});

  Index ambient() const { return ambient_; }
  const std::vector<Matrix>& subspaces() const { return subspaces_; }
  std::size_t size() const { return subspaces_.size(); }

 private:
  Index ambient_;
  std::vector<Matrix> subspaces_;
};

/// {T : (I - P_i) T P_i = 0 for all i}.
AlgebraBasis system_end(const SubspaceSystem& s, const Tolerances& tol = {});

/// S_A on C^{2k}: K+0, 0+K, graph(A), diagonal.
SubspaceSystem from_operator(const Matrix& a, const Tolerances& tol = {});

/// Representation of the subspace quiver R_n with dims (k_1, ..., k_n, d).
Representation system_to_rep(const SubspaceSystem& s);

/// Vertex coordinate subspaces followed by one graph subspace per arrow, in
/// the direct sum of the vertex spaces. Throws ValidationError on self-loops.
SubspaceSystem rep_to_system(const Representation& rep, const Tolerances& tol = {});

/// Replaces the loops at each vertex v by arrows v -> v' carrying the same
/// maps plus one identity arrow; non-loop arrows leaving v leave v' instead.
/// v' is named v + "'" and placed right after v. Loop-free input is
/// returned unchanged.
Representation remove_loops(const Representation& rep);

/// End dimensions on both sides of a bridge.
struct BridgeCheck {
  Index before = 0;
  Index after = 0;
  bool preserved() const { return before == after; }
};

struct SystemConversion {
  SubspaceSystem system;
  BridgeCheck check;
};

struct RepConversion {
  Representation rep;
  BridgeCheck check;
};

/// Checked bridges: compute End dimensions on both sides and throw
/// NumericalError if they differ.
SystemConversion rep_to_system_checked(const Representation& rep, const Tolerances& tol = {});
RepConversion system_to_rep_checked(const SubspaceSystem& s, const Tolerances& tol = {});
RepConversion remove_loops_checked(const Representation& rep, const Tolerances& tol = {});
SystemConversion from_operator_checked(const Matrix& a, const Tolerances& tol = {});

/// Dimension of the commutant {A}'.
Index commutant_dim(const Matrix& a, const Tolerances& tol = {});

/// Block-diagonal embedding of a rep endomorphism into End(rep_to_system(rep)).
Matrix embed_endomorphism(const Representation& rep, const VertexTuple& t);

/// Restriction of a system endomorphism to each subspace, followed by the map
/// itself: an endomorphism of system_to_rep(s).
VertexTuple restrict_endomorphism(const SubspaceSystem& s, const Matrix& phi);

/// max_i ||(I - P_i) T P_i||_F.
double system_residual(const SubspaceSystem& s, const Matrix& t);

}  // namespace qrep
