#pragma once

#include "qrep/numeric.hpp"

#include <optional>
#include <vector>

namespace qrep {

/// Evidence behind a numerical rank decision.
struct RankInfo {
  Index rows = 0;
  Index cols = 0;
  Index rank = 0;
  double sigma_max = 0.0;
  double threshold = 0.0;
  /// smallest kept singular value / largest discarded one; +inf when one side is empty.
  double gap = kInf;
};

struct Nullspace {
  Matrix basis;  // orthonormal columns
  RankInfo info;
};

/// Orthonormal basis of ker(m); singular values at or below
/// max(rows, cols) * eps * max(sigma_max, reference) * kappa are treated as
/// zero. `reference` is the magnitude of the data m was assembled from, so
/// that a system that cancels to rounding noise is recognized as zero.
Nullspace nullspace(const Matrix& m, double kappa, double reference = 0.0);

/// Singular values of m, descending. Tall inputs are reduced by QR first.
Eigen::VectorXd singular_values(const Matrix& m);

RankInfo numerical_rank(const Matrix& m, double kappa);

/// Orthonormal basis for range(m), dropping directions with sigma <= rel_tol * sigma_max.
Matrix orthonormal_range(const Matrix& m, double rel_tol);

/// Orthonormal basis for range(m) of prescribed dimension (leading left singular vectors).
Matrix leading_range(const Matrix& m, Index k);

/// Orthonormal basis for the orthogonal complement of range(q); q must have orthonormal columns.
Matrix orthogonal_complement(const Matrix& q);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
double smallest_singular_value(const Matrix& m);

/// Column-major vectorization and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Eigen::Ref<const Vector>& v, Index rows, Index cols);

/// Embed block-diagonally; blocks may be empty.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Eigenvalues grouped by single-linkage at distance `tol`.
std::vector<std::vector<Index>> cluster_eigenvalues(const Vector& eigenvalues, double tol);

/// Partition of the spectrum obtained by cutting the longest edge of the
/// eigenvalues' minimum spanning tree. Empty when that edge is shorter than `tol`
/// (a single cluster).
struct SpectralCut {
  std::vector<Index> selected;  // indices into the eigenvalue vector
  double separation = 0.0;
};
std::optional<SpectralCut> widest_spectral_cut(const Vector& eigenvalues, double tol);

/// Reorders a complex Schur form x = U T U^* (T upper triangular) so that
/// the diagonal entries flagged in `front` come first. Adjacent swaps by
/// unitary 2x2 rotations.
void reorder_schur(Matrix& unitary, Matrix& triangular, std::vector<bool> front);

/// Solves A Y - Y B = C for upper-triangular A and B with disjoint spectra.
Matrix solve_triangular_sylvester(const Matrix& a, const Matrix& b, const Matrix& c);

struct SpectralSplit {
  Matrix projector;   // Riesz projector onto the selected eigenvalue group
  Index rank = 0;     // size of the selected group
  double separation = 0.0;
};

/// Splits the spectrum of x along its widest gap and returns the spectral
/// projector of one side. Empty when every eigenvalue lies in one cluster of
/// radius `tol` (absolute).
std::optional<SpectralSplit> split_spectrum(const Matrix& x, double tol);

}  // namespace qrep
