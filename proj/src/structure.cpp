#include "qrep/structure.hpp"

#include "qrep/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qrep {

namespace {

void require_nonzero(const Representation& rep, const char* what) {
  if (rep.is_zero())
    throw ValidationError(std::string(what) + " is undefined for the zero representation");
}

// Block-diagonal projection of a total_dim() x total_dim() matrix.
VertexTuple vertex_blocks(const Representation& rep, const Matrix& m) {
  const auto off = rep.offsets();
  VertexTuple out;
  for (std::size_t v = 0; v < rep.dims().size(); ++v)
    out.push_back(m.block(off[v], off[v], rep.dim(v), rep.dim(v)));
  return out;
}

double spectral_radius(const Matrix& x) {
  if (x.rows() == 0) return 0.0;
  Eigen::ComplexEigenSolver<Matrix> es(x, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Frobenius-orthonormal basis of matrices kept as flattened columns.
class SpanBuilder {
 public:
  SpanBuilder(Index n, double rel_tol) : n_(n), rel_tol_(rel_tol) {}

  // Adds m if it leaves the current span; returns whether it did.
  bool add(const Matrix& m) {
    Vector v = vec(m);
    const double before = v.norm();
    if (before <= 1e-14) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis_) v -= b.dot(v) * b;
    const double after = v.norm();
    if (after <= rel_tol_ * before) return false;
    basis_.push_back(v / after);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  Matrix element(std::size_t k) const { return unvec(basis_[k], n_, n_); }

 private:
  Index n_;
  double rel_tol_;
  std::vector<Vector> basis_;
};

}  // namespace

AlgebraBasis end_algebra(const Representation& rep, const HomBasis& end_basis) {
  AlgebraBasis out;
  out.ambient = rep.total_dim();
  for (const auto& t : end_basis.basis) out.basis.push_back(block_diagonal(t));
  return out;
}

RadicalInfo jacobson_radical(const AlgebraBasis& algebra, const Tolerances& tol) {
  const auto k = static_cast<Index>(algebra.basis.size());
  Matrix gram(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) {
      // tr(x y) = sum_{p,q} x_pq y_qp
      Complex t = algebra.basis[i].cwiseProduct(algebra.basis[j].transpose()).sum();
      gram(i, j) = t;
      gram(j, i) = t;
    }
  RadicalInfo out;
  Nullspace ns = nullspace(gram, tol.svd_kappa());
  out.dimension = ns.basis.cols();
  out.coefficients = ns.basis;
  out.rank = ns.info;
  return out;
}

IndecomposabilityResult is_indecomposable(const Representation& rep, const Tolerances& tol) {
  require_nonzero(rep, "indecomposability");
  IndecomposabilityResult out;
  out.seed = tol.seed;

  HomBasis e = end(rep, tol);
  out.end_dim = e.dimension();
  out.end_rank = e.rank;
  AlgebraBasis algebra = end_algebra(rep, e);
  RadicalInfo rad = jacobson_radical(algebra, tol);
  out.radical_dim = rad.dimension;
  out.radical_rank = rad.rank;
  if (out.semisimple_dim() == 1) {
    out.indecomposable = true;
    return out;
  }
  if (out.semisimple_dim() < 1)
    throw NumericalError("trace form vanishes on End; rank decision is inconsistent");

  // A random element of a non-local algebra has a spectrum that splits; its
  // spectral projector is a polynomial in it and therefore an idempotent in End.
  const double scale = rep.scale() > 0.0 ? rep.scale() : 1.0;
  const Index total = rep.total_dim();
  Rng rng(tol.seed);
  std::ostringstream diagnostics;
  for (int attempt = 0; attempt < tol.max_tries; ++attempt) {
    ++out.tries;
    Matrix x = Matrix::Zero(total, total);
    auto coeffs = rng.coefficients(algebra.basis.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) x += coeffs[k] * algebra.basis[k];

    const double radius = spectral_radius(x);
    auto split = split_spectrum(x, tol.tau_cluster() * radius);
    if (!split) {
      diagnostics << " [try " << attempt << ": single cluster]";
      continue;
    }
    Matrix p = split->projector;
    Matrix p2 = p * p;
    p = 3.0 * p2 - 2.0 * p2 * p;
    VertexTuple blocks = vertex_blocks(rep, p);
    p = block_diagonal(blocks);

    const double pnorm = p.norm();
    const double defect = (p * p - p).norm() / pnorm;
    const double residual = intertwining_residual(rep, rep, blocks);
    if (defect > tol.tau_idempotent() || residual > tol.tau_hom() * scale * pnorm) {
      diagnostics << " [try " << attempt << ": defect " << defect << ", residual " << residual
                  << "]";
      continue;
    }
    out.idempotent = std::move(blocks);
    out.idempotent_defect = defect;
    out.spectral_separation = split->separation;
    return out;
  }
  throw NumericalError("End is not local (semisimple dimension " +
                       std::to_string(out.semisimple_dim()) +
                       ") but no splitting idempotent was found:" + diagnostics.str());
}

bool is_transitive(const Representation& rep, const Tolerances& tol) {
  require_nonzero(rep, "transitivity");
  return end(rep, tol).dimension() == 1;
}

AlgebraBasis generated_algebra(const Representation& rep, const Tolerances& tol) {
  const Index n = rep.total_dim();
  AlgebraBasis out;
  out.ambient = n;
  if (n == 0) return out;

  std::vector<Matrix> generators;
  const auto off = rep.offsets();
  for (std::size_t v = 0; v < rep.dims().size(); ++v) {
    if (rep.dim(v) == 0 || rep.dim(v) == n) continue;
    Matrix e = Matrix::Zero(n, n);
    e.block(off[v], off[v], rep.dim(v), rep.dim(v)).setIdentity();
    generators.push_back(e / e.norm());
  }
  for (std::size_t a = 0; a < rep.maps().size(); ++a) {
    const double norm = rep.map(a).norm();
    if (rep.map(a).size() == 0 || norm == 0.0) continue;
    generators.push_back(rep.embedded_map(a) / norm);
  }

  // Words in the generators span the algebra; closing span{I} under left
  // multiplication by generators reaches all of them.
  SpanBuilder span(n, tol.tau_algebra());
  span.add(Matrix::Identity(n, n));
  const std::size_t cap = static_cast<std::size_t>(n * n);
  for (std::size_t next = 0; next < span.size(); ++next) {
    const Matrix b = span.element(next);
    for (const auto& g : generators) {
      span.add(g * b);
      if (span.size() > cap)
        throw NumericalError("generated algebra exceeds the full matrix algebra dimension");
    }
  }
  for (std::size_t k = 0; k < span.size(); ++k) out.basis.push_back(span.element(k));
  return out;
}

SimplicityResult is_simple(const Representation& rep, const Tolerances& tol) {
  require_nonzero(rep, "simplicity");
  SimplicityResult out;
  const Index n = rep.total_dim();
  AlgebraBasis algebra = generated_algebra(rep, tol);
  out.algebra_dim = algebra.dimension();
  out.full_dim = n * n;
  out.simple = out.algebra_dim == out.full_dim;
  if (out.simple) return out;

  // Witness: the cyclic submodule A v of an eigenvector v of a random element.
  // Some eigenvector lies in a minimal invariant subspace, so A v is proper.
  const double witness_tol = 1e-8;
  Rng rng(tol.seed);
  const auto off = rep.offsets();
  for (int attempt = 0; attempt < tol.max_tries && !out.witness; ++attempt) {
    Matrix x = Matrix::Zero(n, n);
    auto coeffs = rng.coefficients(algebra.basis.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) x += coeffs[k] * algebra.basis[k];
    Eigen::ComplexEigenSolver<Matrix> es(x, false);
    for (Index e = 0; e < n && !out.witness; ++e) {
      Matrix shifted = x - es.eigenvalues()(e) * Matrix::Identity(n, n);
      Eigen::BDCSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
      Vector v = svd.matrixV().col(n - 1);

      Matrix orbit(n, algebra.dimension());
      for (Index k = 0; k < algebra.dimension(); ++k) orbit.col(k) = algebra.basis[k] * v;
      Matrix w = orthonormal_range(orbit, witness_tol);
      if (w.cols() == 0 || w.cols() == n) continue;

      VertexTuple inclusions;
      Index graded = 0;
      for (std::size_t vtx = 0; vtx < rep.dims().size(); ++vtx) {
        Matrix rows = w.middleRows(off[vtx], rep.dim(vtx));
        inclusions.push_back(orthonormal_range(rows, witness_tol));
        graded += inclusions.back().cols();
      }
      if (graded != w.cols()) continue;
      try {
        out.witness_rep = restrict_to(rep, inclusions, tol, 1e-6 * std::max(rep.scale(), 1.0));
        out.witness = std::move(inclusions);
      } catch (const ValidationError&) {
        out.witness_rep.reset();
      }
    }
  }
  return out;
}

bool is_canonically_simple(const Representation& rep) {
  Index ones = 0;
  for (Index d : rep.dims()) {
    if (d == 1) ++ones;
    else if (d != 0) return false;
  }
  if (ones != 1) return false;
  for (const auto& m : rep.maps())
    if (m.size() > 0 && max_abs(m) != 0.0) return false;
  return true;
}

IrreducibilityResult is_irreducible(const Representation& rep, const Tolerances& tol) {
  require_nonzero(rep, "irreducibility");
  IrreducibilityResult out;
  HomBasis e = end(rep, tol);
  out.end_dim = e.dimension();

  // dim(End ∩ End*) = 2k - dim(End + End*)
  Index length = 0;
  for (Index d : rep.dims()) length += d * d;
  const Index k = e.dimension();
  Matrix stacked(length, 2 * k);
  for (Index j = 0; j < k; ++j) {
    Index row = 0;
    for (const auto& block : e.basis[j]) {
      const Index sz = block.size();
      stacked.col(j).segment(row, sz) = vec(block);
      stacked.col(k + j).segment(row, sz) = vec(block.adjoint());
      row += sz;
    }
  }
  out.star_dim = 2 * k - numerical_rank(stacked, tol.svd_kappa()).rank;
  out.irreducible = out.star_dim == 1;
  return out;
}

std::vector<Representation> DecompositionTree::leaves() const {
  if (is_leaf()) return {rep};
  std::vector<Representation> out;
  for (const auto& child : children) {
    auto sub = child.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Representation DecompositionTree::reassemble() const {
  auto parts = leaves();
  Representation sum = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) sum = direct_sum(sum, parts[k]);
  return sum;
}

DecompositionTree decompose(const Representation& rep, const Tolerances& tol) {
  IndecomposabilityResult r = is_indecomposable(rep, tol);
  DecompositionTree node{rep, r.end_dim, r.radical_dim, std::nullopt, {}, {}};
  if (r.indecomposable) return node;

  const VertexTuple& p = *r.idempotent;
  VertexTuple first;
  VertexTuple second;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const Index d = rep.dim(v);
    if (d == 0) {
      first.emplace_back(0, 0);
      second.emplace_back(0, 0);
      continue;
    }
    const double trace = p[v].trace().real();
    const auto k = static_cast<Index>(std::llround(trace));
    if (std::abs(trace - static_cast<double>(k)) > 1e-6 || k < 0 || k > d)
      throw NumericalError("idempotent has non-integral trace " + std::to_string(trace));
    first.push_back(leading_range(p[v], k));
    second.push_back(leading_range(Matrix::Identity(d, d) - p[v], d - k));
  }

  Tolerances child_tol = tol;
  node.idempotent = p;
  for (int c = 0; c < 2; ++c) {
    const VertexTuple& incl = c == 0 ? first : second;
    Representation part = restrict_to(rep, incl, tol);
    if (part.is_zero()) throw NumericalError("idempotent split produced a zero summand");
    child_tol.seed = tol.seed * 2 + 1 + static_cast<std::uint64_t>(c);
    node.children.push_back(decompose(part, child_tol));
    node.inclusions.push_back(incl);
  }
  return node;
}

bool is_single_jordan_block(const Matrix& a, const Tolerances& tol,
                            Index* geometric_multiplicity) {
  const Index n = a.rows();
  if (n == 0 || a.cols() != n) throw ValidationError("single-Jordan-block test needs a square matrix");
  const Complex mean = a.trace() / static_cast<double>(n);
  const Matrix b = a - mean * Matrix::Identity(n, n);

  const Index gm = n - numerical_rank(b, tol.svd_kappa()).rank;
  if (geometric_multiplicity) *geometric_multiplicity = gm;
  if (n == 1) return true;

  // One eigenvalue cluster: B nilpotent relative to ||B||^n. For eigenvalue
  // spread d this reads roughly d <= tau_cluster * ||B||, floored at rounding level.
  const double bnorm = singular_values(b).size() ? singular_values(b)(0) : 0.0;
  if (bnorm == 0.0) return false;  // scalar matrix with n > 1
  Matrix power = b;
  for (Index k = 1; k < n; ++k) power = power * b;
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = std::max(std::pow(tol.tau_cluster(), static_cast<double>(n)),
                                static_cast<double>(n) * eps * tol.svd_kappa());
  const double pn = singular_values(power)(0);
  const bool one_cluster = pn <= floor * std::pow(bnorm, static_cast<double>(n));
  return one_cluster && gm == 1;
}

StrongIrreducibilityResult is_strongly_irreducible(const Matrix& a, const Tolerances& tol) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw ValidationError("strong irreducibility needs a nonempty square matrix");
  StrongIrreducibilityResult out;
  out.single_jordan_block = is_single_jordan_block(a, tol, &out.geometric_multiplicity);
  IndecomposabilityResult ind = is_indecomposable(loop_representation({a}), tol);
  out.indecomposable = ind.indecomposable;
  out.commutant_dim = ind.end_dim;
  if (out.indecomposable != out.single_jordan_block)
    throw NumericalError(std::string("strong irreducibility checks disagree: indecomposable=") +
                         (out.indecomposable ? "true" : "false") +
                         ", single Jordan block=" + (out.single_jordan_block ? "true" : "false"));
  out.strongly_irreducible = out.indecomposable;
  return out;
}

}  // namespace qrep
