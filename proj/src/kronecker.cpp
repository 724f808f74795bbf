#include "qrep/kronecker.hpp"

#include "qrep/linalg.hpp"

namespace qrep {

namespace {

Matrix require_invertible(const Matrix& m, const Tolerances& tol, const char* what) {
  if (m.rows() != m.cols()) throw ValidationError(std::string(what) + " must be square");
  Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(s.size() - 1) < tol.tau_inv() * s(0))
    throw ValidationError(std::string(what) + " is numerically singular");
  return m.inverse();
}

}  // namespace

std::string to_string(KroneckerKind kind) {
  switch (kind) {
    case KroneckerKind::jordan_first: return "jordan_first";
    case KroneckerKind::jordan_second: return "jordan_second";
    case KroneckerKind::wide: return "wide";
    case KroneckerKind::tall: return "tall";
  }
  return "unknown";
}

Matrix jordan_block(Complex lambda, Index n) {
  Matrix j = lambda * Matrix::Identity(n, n);
  for (Index i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

Representation build_family(const KroneckerFamily& family) {
  const Index n = family.n;
  switch (family.kind) {
    case KroneckerKind::jordan_first:
    case KroneckerKind::jordan_second: {
      if (n < 1) throw ValidationError("jordan families need n >= 1");
      Matrix j = jordan_block(family.lambda, n);
      Matrix id = Matrix::Identity(n, n);
      return family.kind == KroneckerKind::jordan_first ? kronecker_representation({j, id})
                                                        : kronecker_representation({id, j});
    }
    case KroneckerKind::wide: {
      if (n < 0) throw ValidationError("wide family needs n >= 0");
      Matrix left = Matrix::Zero(n, n + 1);
      Matrix right = Matrix::Zero(n, n + 1);
      left.leftCols(n).setIdentity();
      right.rightCols(n).setIdentity();
      return Representation(Quiver::kronecker(2), {n + 1, n}, {left, right});
    }
    case KroneckerKind::tall: {
      if (n < 0) throw ValidationError("tall family needs n >= 0");
      Matrix top = Matrix::Zero(n + 1, n);
      Matrix bottom = Matrix::Zero(n + 1, n);
      top.topRows(n).setIdentity();
      bottom.bottomRows(n).setIdentity();
      return Representation(Quiver::kronecker(2), {n, n + 1}, {top, bottom});
    }
  }
  throw ValidationError("unknown Kronecker family");
}

KroneckerReduction reduce_invertible_first(const Matrix& a, const Matrix& b,
                                           const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("pencil matrices must have equal shapes");
  Matrix ainv = require_invertible(a, tol, "first map");
  const Index n = a.rows();
  return {kronecker_representation({Matrix::Identity(n, n), ainv * b}),
          {Matrix::Identity(n, n), ainv}};
}

KroneckerReduction reduce_pencil(const Matrix& a, const Matrix& b, Complex x, Complex y,
                                 const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("pencil matrices must have equal shapes");
  if (y == Complex(0.0)) throw ValidationError("pencil coefficient y must be nonzero");
  Matrix pinv = require_invertible(x * a + y * b, tol, "pencil value xA + yB");
  const Index n = a.rows();
  Matrix t = pinv * a;
  Matrix second = (1.0 / y) * Matrix::Identity(n, n) - (x / y) * t;
  return {kronecker_representation({t, second}), {Matrix::Identity(n, n), pinv}};
}

Representation polynomial_model(const Matrix& t, std::span<const Complex> coeffs) {
  if (t.rows() != t.cols()) throw ValidationError("polynomial model needs a square operator");
  if (coeffs.size() < 2) throw ValidationError("polynomial model needs degree n >= 1");
  if (coeffs[0] == Complex(0.0)) throw ValidationError("constant coefficient must be nonzero");
  const Index d = t.rows();

  std::vector<Matrix> powers{Matrix::Identity(d, d)};
  for (std::size_t k = 1; k < coeffs.size(); ++k) powers.push_back(powers.back() * t);
  Matrix poly = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < coeffs.size(); ++k) poly += coeffs[k] * powers[k];

  std::vector<Arrow> arrows;
  std::vector<Matrix> maps{poly};
  arrows.push_back({"a0", "1", "2"});
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    arrows.push_back({"a" + std::to_string(k), "1", "2"});
    maps.push_back(powers[k]);
  }
  return Representation(Quiver({"1", "2"}, std::move(arrows)), {d, d}, std::move(maps));
}

}  // namespace qrep
