#include "qrep/intertwiner.hpp"

#include <Eigen/SVD>

#include <algorithm>

namespace qrep {

namespace {

struct Layout {
  std::vector<Index> offset;
  Index unknowns = 0;
};

Layout layout(const Representation& from, const Representation& to) {
  Layout out;
  for (std::size_t v = 0; v < from.dims().size(); ++v) {
    out.offset.push_back(out.unknowns);
    out.unknowns += to.dim(v) * from.dim(v);
  }
  return out;
}

double residual_scale(const Representation& from, const Representation& to) {
  double s = std::max(from.scale(), to.scale());
  return s > 0.0 ? s : 1.0;
}

}  // namespace

double intertwining_residual(const Representation& from, const Representation& to,
                             const VertexTuple& t) {
  const Quiver& q = from.quiver();
  double worst = 0.0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& tr = t[q.target_index(a)];
    const Matrix& ts = t[q.source_index(a)];
    Matrix lhs = tr * from.map(a);
    Matrix rhs = to.map(a) * ts;
    if (lhs.size() > 0) worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

Matrix intertwining_system(const Representation& from, const Representation& to) {
  require_same_quiver(from, to);
  const Quiver& q = from.quiver();
  const Layout lay = layout(from, to);

  Index rows = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    rows += to.dim(q.target_index(a)) * from.dim(q.source_index(a));

  Matrix m = Matrix::Zero(rows, lay.unknowns);
  Index row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.source_index(a);
    const auto r = q.target_index(a);
    const Index block_rows = to.dim(r) * from.dim(s);
    if (block_rows == 0) continue;
    // vec(T_r f) = (f^T (x) I) vec(T_r);  vec(g T_s) = (I (x) g) vec(T_s)
    m.block(row, lay.offset[r], block_rows, to.dim(r) * from.dim(r)) +=
        kron(from.map(a).transpose(), Matrix::Identity(to.dim(r), to.dim(r)));
    m.block(row, lay.offset[s], block_rows, to.dim(s) * from.dim(s)) -=
        kron(Matrix::Identity(from.dim(s), from.dim(s)), to.map(a));
    row += block_rows;
  }
  return m;
}

HomBasis hom(const Representation& from, const Representation& to, const Tolerances& tol) {
  require_same_quiver(from, to);
  const Layout lay = layout(from, to);
  if (lay.unknowns > tol.size_limit)
    throw SizeLimitError("intertwiner system has " + std::to_string(lay.unknowns) +
                         " unknowns, limit is " + std::to_string(tol.size_limit));

  HomBasis out;
  out.tolerance = tol.tau_hom() * residual_scale(from, to);
  if (lay.unknowns == 0) return out;

  const Matrix system = intertwining_system(from, to);
  Nullspace ns = nullspace(system, tol.svd_kappa(), residual_scale(from, to));
  out.rank = ns.info;

  const std::size_t nv = from.dims().size();
  for (Index k = 0; k < ns.basis.cols(); ++k) {
    VertexTuple t(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      const Index rows = to.dim(v);
      const Index cols = from.dim(v);
      t[v] = unvec(ns.basis.col(k).segment(lay.offset[v], rows * cols), rows, cols);
    }
    const double res = intertwining_residual(from, to, t);
    out.max_residual = std::max(out.max_residual, res);
    out.basis.push_back(std::move(t));
  }
  if (out.max_residual > out.tolerance)
    throw NumericalError("hom basis residual " + std::to_string(out.max_residual) +
                         " exceeds tolerance " + std::to_string(out.tolerance));
  return out;
}

HomBasis end(const Representation& rep, const Tolerances& tol) { return hom(rep, rep, tol); }

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    case IsoVerdict::probably_no: return "probably_no";
  }
  return "unknown";
}

VertexTuple combine(const std::vector<VertexTuple>& basis, const std::vector<Complex>& coeffs) {
  VertexTuple out;
  if (basis.empty()) return out;
  for (const auto& block : basis.front()) out.push_back(Matrix::Zero(block.rows(), block.cols()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += coeffs[k] * basis[k][v];
  return out;
}

IsoResult are_isomorphic(const Representation& a, const Representation& b,
                         const Tolerances& tol) {
  require_same_quiver(a, b);
  IsoResult out;
  out.seed = tol.seed;
  if (a.dims() != b.dims()) {
    out.verdict = IsoVerdict::no;
    out.reason = "dimension vectors differ";
    return out;
  }
  if (a.total_dim() == 0) {
    out.verdict = IsoVerdict::yes;
    out.witness = VertexTuple(a.dims().size(), Matrix(0, 0));
    out.reason = "both representations are zero";
    return out;
  }

  HomBasis h = hom(a, b, tol);
  out.hom_dimension = h.dimension();
  if (h.dimension() == 0) {
    out.verdict = IsoVerdict::no;
    out.reason = "hom space is zero";
    return out;
  }

  Rng rng(tol.seed);
  for (int sample = 0; sample < tol.iso_samples; ++sample) {
    ++out.samples_tried;
    VertexTuple t = combine(h.basis, rng.coefficients(h.basis.size()));
    double global_max = 0.0;
    std::vector<Eigen::VectorXd> sv;
    for (const auto& block : t) {
      sv.push_back(singular_values(block));
      if (sv.back().size() > 0) global_max = std::max(global_max, sv.back()(0));
    }
    bool invertible = global_max > 0.0;
    for (const auto& s : sv) {
      if (s.size() == 0) continue;
      const double smin = s(s.size() - 1);
      if (smin < tol.tau_inv() * s(0) || s(0) < tol.tau_inv() * global_max) invertible = false;
    }
    if (invertible) {
      out.verdict = IsoVerdict::yes;
      out.witness = std::move(t);
      out.reason = "random intertwiner is invertible at every vertex";
      return out;
    }
  }
  out.verdict = IsoVerdict::probably_no;
  out.reason = "no sampled intertwiner was invertible";
  return out;
}

bool relatively_prime(const Representation& a, const Representation& b, const Tolerances& tol) {
  return hom(a, b, tol).dimension() == 0 && hom(b, a, tol).dimension() == 0;
}

}  // namespace qrep
