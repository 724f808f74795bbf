#include "qrep/representation.hpp"

#include "qrep/linalg.hpp"

#include <Eigen/QR>

#include <cmath>
#include <sstream>

namespace qrep {

namespace {

std::string shape(Index r, Index c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

}  // namespace

Representation::Representation(Quiver quiver, std::vector<Index> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertex_count())
    throw ValidationError("expected " + std::to_string(quiver_.vertex_count()) +
                          " vertex dimensions, got " + std::to_string(dims_.size()));
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v] < 0)
      throw ValidationError("negative dimension at vertex '" + quiver_.vertices()[v] + "'");
  if (maps_.size() != quiver_.arrow_count())
    throw ValidationError("expected " + std::to_string(quiver_.arrow_count()) +
                          " arrow matrices, got " + std::to_string(maps_.size()));
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Index rows = dims_[quiver_.target_index(a)];
    const Index cols = dims_[quiver_.source_index(a)];
    const Matrix& m = maps_[a];
    if (m.rows() != rows || m.cols() != cols)
      throw ValidationError("arrow '" + quiver_.arrows()[a].name + "' expects a " +
                            shape(rows, cols) + " matrix, got " + shape(m.rows(), m.cols()));
    if (!m.allFinite())
      throw ValidationError("arrow '" + quiver_.arrows()[a].name + "' has non-finite entries");
  }
}

Representation Representation::zero(const Quiver& quiver, std::vector<Index> dims) {
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto r = quiver.target_index(a);
    const auto s = quiver.source_index(a);
    if (r >= dims.size() || s >= dims.size()) throw ValidationError("dimension vector too short");
    maps.push_back(Matrix::Zero(dims[r], dims[s]));
  }
  return Representation(quiver, std::move(dims), std::move(maps));
}

DimensionVector Representation::dimension_vector() const {
  DimensionVector out;
  for (std::size_t v = 0; v < dims_.size(); ++v) out[quiver_.vertices()[v]] = dims_[v];
  return out;
}

Index Representation::total_dim() const {
  Index total = 0;
  for (Index d : dims_) total += d;
  return total;
}

std::vector<Index> Representation::offsets() const {
  std::vector<Index> out(dims_.size(), 0);
  Index acc = 0;
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    out[v] = acc;
    acc += dims_[v];
  }
  return out;
}

double Representation::scale() const {
  double s = 0.0;
  for (const auto& m : maps_) s = std::max(s, m.norm());
  return s;
}

Matrix Representation::embedded_map(std::size_t arrow) const {
  const auto off = offsets();
  const auto s = quiver_.source_index(arrow);
  const auto r = quiver_.target_index(arrow);
  Matrix out = Matrix::Zero(total_dim(), total_dim());
  out.block(off[r], off[s], dims_[r], dims_[s]) = maps_[arrow];
  return out;
}

void require_same_quiver(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver()))
    throw ValidationError("representations are over different quivers");
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_quiver(a, b);
  std::vector<Index> dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k)
    maps.push_back(block_diagonal({a.map(k), b.map(k)}));
  return Representation(a.quiver(), std::move(dims), std::move(maps));
}

Representation restrict_to(const Representation& rep, const VertexTuple& inclusions,
                           const Tolerances& tol, std::optional<double> absolute_tolerance) {
  const Quiver& q = rep.quiver();
  if (inclusions.size() != q.vertex_count())
    throw ValidationError("restriction needs one inclusion per vertex");

  std::vector<Index> dims(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const Matrix& incl = inclusions[v];
    if (incl.rows() != rep.dim(v))
      throw ValidationError("inclusion at vertex '" + q.vertices()[v] + "' has " +
                            std::to_string(incl.rows()) + " rows, expected " +
                            std::to_string(rep.dim(v)));
    if (incl.cols() > 0 && numerical_rank(incl, tol.svd_kappa()).rank < incl.cols())
      throw ValidationError("inclusion at vertex '" + q.vertices()[v] +
                            "' is rank deficient");
    dims[v] = incl.cols();
  }

  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& is = inclusions[q.source_index(a)];
    const Matrix& ir = inclusions[q.target_index(a)];
    const Matrix image = rep.map(a) * is;
    Matrix g = Matrix::Zero(ir.cols(), is.cols());
    if (ir.cols() > 0 && is.cols() > 0) g = ir.colPivHouseholderQr().solve(image);
    const double residual = image.size() == 0 ? 0.0 : max_abs(image - ir * g);
    const double bound = absolute_tolerance
                             ? *absolute_tolerance
                             : tol.tau_range() * std::max(max_abs(rep.map(a)) * max_abs(is),
                                                          std::numeric_limits<double>::min());
    if (residual > bound)
      throw ValidationError("subspaces are not invariant under arrow '" + q.arrows()[a].name +
                            "' (residual " + std::to_string(residual) + ")");
    maps.push_back(std::move(g));
  }
  return Representation(q, std::move(dims), std::move(maps));
}

Representation canonically_simple(const Quiver& quiver, std::string_view vertex) {
  std::vector<Index> dims(quiver.vertex_count(), 0);
  dims[quiver.vertex_index(vertex)] = 1;
  return Representation::zero(quiver, std::move(dims));
}

bool is_isomorphism_compatible(const Representation& a, const Representation& b) {
  require_same_quiver(a, b);
  return a.dims() == b.dims();
}

Representation change_basis(const Representation& rep, const VertexTuple& phi) {
  const Quiver& q = rep.quiver();
  if (phi.size() != q.vertex_count()) throw ValidationError("change of basis needs one block per vertex");
  std::vector<Matrix> inverses;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[v].rows() != rep.dim(v) || phi[v].cols() != rep.dim(v))
      throw ValidationError("change of basis block has wrong shape at vertex '" +
                            q.vertices()[v] + "'");
    inverses.push_back(rep.dim(v) == 0 ? Matrix(0, 0) : Matrix(phi[v].inverse()));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.push_back(phi[q.target_index(a)] * rep.map(a) * inverses[q.source_index(a)]);
  return Representation(q, rep.dims(), std::move(maps));
}

Representation loop_representation(const std::vector<Matrix>& maps) {
  if (maps.empty()) throw ValidationError("loop representation needs at least one map");
  const Index n = maps.front().rows();
  return Representation(Quiver::loop(static_cast<int>(maps.size())), {n}, maps);
}

Representation kronecker_representation(const std::vector<Matrix>& maps) {
  if (maps.empty()) throw ValidationError("kronecker representation needs at least one map");
  const Index rows = maps.front().rows();
  const Index cols = maps.front().cols();
  return Representation(Quiver::kronecker(static_cast<int>(maps.size())), {cols, rows}, maps);
}

}  // namespace qrep
