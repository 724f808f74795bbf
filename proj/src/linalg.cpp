#include "qrep/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrep {

namespace {

// Square matrix with the same singular values (padded with zeros for wide
// inputs) and the same right singular subspaces.
Matrix squared_up(const Matrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (rows > cols) {
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    return r;
  }
  if (rows < cols) {
    Matrix padded = Matrix::Zero(cols, cols);
    padded.topRows(rows) = m;
    return padded;
  }
  return m;
}

}  // namespace

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd(0);
  Matrix work = m.rows() > m.cols() ? squared_up(m) : m;
  Eigen::BDCSVD<Matrix> svd(work);
  return svd.singularValues();
}

Nullspace nullspace(const Matrix& m, double kappa, double reference) {
  Nullspace out;
  out.info.rows = m.rows();
  out.info.cols = m.cols();
  const Index n = m.cols();
  if (n == 0) {
    out.basis = Matrix(0, 0);
    return out;
  }
  if (m.rows() == 0) {
    out.basis = Matrix::Identity(n, n);
    return out;
  }

  Matrix work = squared_up(m);
  Eigen::BDCSVD<Matrix> svd(work, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();

  const double eps = std::numeric_limits<double>::epsilon();
  out.info.sigma_max = s(0);
  out.info.threshold =
      static_cast<double>(std::max(m.rows(), m.cols())) * eps * std::max(s(0), reference) * kappa;
  Index rank = 0;
  while (rank < s.size() && s(rank) > out.info.threshold) ++rank;
  out.info.rank = rank;
  if (rank > 0 && rank < s.size())
    out.info.gap = s(rank) > 0.0 ? s(rank - 1) / s(rank) : kInf;

  out.basis = svd.matrixV().rightCols(n - rank);
  return out;
}

RankInfo numerical_rank(const Matrix& m, double kappa) {
  RankInfo info;
  info.rows = m.rows();
  info.cols = m.cols();
  Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0) return info;
  const double eps = std::numeric_limits<double>::epsilon();
  info.sigma_max = s(0);
  info.threshold =
      static_cast<double>(std::max(m.rows(), m.cols())) * eps * s(0) * kappa;
  Index rank = 0;
  while (rank < s.size() && s(rank) > info.threshold) ++rank;
  info.rank = rank;
  if (rank > 0 && rank < s.size())
    info.gap = s(rank) > 0.0 ? s(rank - 1) / s(rank) : kInf;
  return info;
}

Matrix orthonormal_range(const Matrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  Index keep = 0;
  while (keep < s.size() && s(keep) > rel_tol * s(0)) ++keep;
  return svd.matrixU().leftCols(keep);
}

Matrix leading_range(const Matrix& m, Index k) {
  if (k == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(k);
}

Matrix orthogonal_complement(const Matrix& q) {
  const Index d = q.rows();
  const Index k = q.cols();
  if (k == 0) return Matrix::Identity(d, d);
  Eigen::HouseholderQR<Matrix> qr(q);
  Matrix full = qr.householderQ() * Matrix::Identity(d, d);
  return full.rightCols(d - k);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double smallest_singular_value(const Matrix& m) {
  Eigen::VectorXd s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Eigen::Ref<const Vector>& v, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  Index rows = 0;
  Index cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::Zero(rows, cols);
  Index r = 0;
  Index c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

std::vector<std::vector<Index>> cluster_eigenvalues(const Vector& eigenvalues,
                                                    double tol) {
  const Index n = eigenvalues.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(eigenvalues(i) - eigenvalues(j)) <= tol) parent[find(i)] = find(j);

  std::vector<std::vector<Index>> clusters;
  std::vector<Index> slot(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Index>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(i);
  }
  return clusters;
}

std::optional<SpectralCut> widest_spectral_cut(const Vector& eigenvalues, double tol) {
  const Index n = eigenvalues.size();
  if (n < 2) return std::nullopt;

  // Prim's algorithm on the complete graph.
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, kInf);
  std::vector<Index> link(n, -1);
  std::vector<std::pair<Index, Index>> edges;
  std::vector<double> lengths;
  best[0] = 0.0;
  for (Index step = 0; step < n; ++step) {
    Index u = -1;
    for (Index i = 0; i < n; ++i)
      if (!in_tree[i] && (u < 0 || best[i] < best[u])) u = i;
    in_tree[u] = true;
    if (link[u] >= 0) {
      edges.emplace_back(link[u], u);
      lengths.push_back(best[u]);
    }
    for (Index i = 0; i < n; ++i) {
      if (in_tree[i]) continue;
      double d = std::abs(eigenvalues(u) - eigenvalues(i));
      if (d < best[i]) {
        best[i] = d;
        link[i] = u;
      }
    }
  }

  auto widest = std::max_element(lengths.begin(), lengths.end());
  if (*widest <= tol) return std::nullopt;
  const auto cut = static_cast<std::size_t>(widest - lengths.begin());

  // Component of the cut edge's far endpoint once the edge is removed.
  std::vector<std::vector<Index>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == cut) continue;
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::vector<bool> seen(n, false);
  std::vector<Index> stack{edges[cut].second};
  seen[edges[cut].second] = true;
  SpectralCut out;
  out.separation = *widest;
  while (!stack.empty()) {
    Index u = stack.back();
    stack.pop_back();
    out.selected.push_back(u);
    for (Index v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

void reorder_schur(Matrix& unitary, Matrix& triangular, std::vector<bool> front) {
  const Index n = triangular.rows();
  Index target = 0;
  for (Index k = 0; k < n; ++k) {
    if (!front[k]) continue;
    for (Index j = k - 1; j >= target; --j) {
      const Complex a = triangular(j, j);
      const Complex b = triangular(j, j + 1);
      const Complex d = triangular(j + 1, j + 1);
      Eigen::Vector2cd x(b, d - a);
      const double norm = x.norm();
      if (norm == 0.0) {
        std::swap(front[j], front[j + 1]);
        continue;
      }
      x /= norm;
      Eigen::Matrix2cd q;
      q << x(0), -std::conj(x(1)), x(1), std::conj(x(0));
      triangular.middleRows(j, 2) = q.adjoint() * triangular.middleRows(j, 2);
      triangular.middleCols(j, 2) = triangular.middleCols(j, 2) * q;
      unitary.middleCols(j, 2) = unitary.middleCols(j, 2) * q;
      triangular(j + 1, j) = 0.0;
      std::swap(front[j], front[j + 1]);
    }
    ++target;
  }
}

Matrix solve_triangular_sylvester(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Index k = a.rows();
  const Index m = b.rows();
  Matrix y = Matrix::Zero(k, m);
  for (Index j = 0; j < m; ++j) {
    Vector rhs = c.col(j);
    for (Index i = 0; i < j; ++i) rhs += b(i, j) * y.col(i);
    Matrix shifted = a - b(j, j) * Matrix::Identity(k, k);
    y.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return y;
}

std::optional<SpectralSplit> split_spectrum(const Matrix& x, double tol) {
  const Index n = x.rows();
  if (n < 2) return std::nullopt;
  Eigen::ComplexSchur<Matrix> schur(x);
  if (schur.info() != Eigen::Success) throw NumericalError("Schur decomposition failed");
  Matrix u = schur.matrixU();
  Matrix t = schur.matrixT();

  auto cut = widest_spectral_cut(t.diagonal(), tol);
  if (!cut) return std::nullopt;

  std::vector<bool> front(n, false);
  for (Index i : cut->selected) front[i] = true;
  reorder_schur(u, t, front);

  const Index k = static_cast<Index>(cut->selected.size());
  Matrix y = solve_triangular_sylvester(t.topLeftCorner(k, k), t.bottomRightCorner(n - k, n - k),
                                        t.topRightCorner(k, n - k));
  Matrix pt = Matrix::Zero(n, n);
  pt.topLeftCorner(k, k).setIdentity();
  pt.topRightCorner(k, n - k) = y;

  SpectralSplit out;
  out.projector = u * pt * u.adjoint();
  out.rank = k;
  out.separation = cut->separation;
  return out;
}

}  // namespace qrep
