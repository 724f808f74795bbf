#include "qrep/subspace.hpp"

#include "qrep/intertwiner.hpp"
#include "qrep/linalg.hpp"

#include <algorithm>
#include <set>

namespace qrep {

SubspaceSystem::SubspaceSystem(Index ambient, std::vector<Matrix> inclusions,
                               const Tolerances& tol)
    : ambient_(ambient) {
  if (ambient < 0) throw ValidationError("ambient dimension must be nonnegative");
  for (std::size_t i = 0; i < inclusions.size(); ++i) {
    const Matrix& m = inclusions[i];
    if (m.rows() != ambient)
      throw ValidationError("subspace " + std::to_string(i + 1) + " has " +
                            std::to_string(m.rows()) + " rows, expected " +
                            std::to_string(ambient));
    if (!m.allFinite())
      throw ValidationError("subspace " + std::to_string(i + 1) + " has non-finite entries");
    if (m.cols() == 0) {
      subspaces_.push_back(m);
      continue;
    }
    if (numerical_rank(m, tol.svd_kappa()).rank < m.cols())
      throw ValidationError("subspace " + std::to_string(i + 1) + " inclusion is rank deficient");
    subspaces_.push_back(leading_range(m, m.cols()));
  }
}

AlgebraBasis system_end(const SubspaceSystem& s, const Tolerances& tol) {
  const Index d = s.ambient();
  if (d * d > tol.size_limit)
    throw SizeLimitError("system endomorphisms need " + std::to_string(d * d) +
                         " unknowns, limit is " + std::to_string(tol.size_limit));
  std::vector<Matrix> blocks;
  Index rows = 0;
  for (const auto& q : s.subspaces()) {
    if (q.cols() == 0 || q.cols() == d) continue;
    Matrix perp = orthogonal_complement(q);
    // vec(P^* T Q) = (Q^T (x) P^*) vec(T)
    blocks.push_back(kron(q.transpose(), perp.adjoint()));
    rows += blocks.back().rows();
  }
  AlgebraBasis out;
  out.ambient = d;
  if (d == 0) return out;
  Matrix system = Matrix::Zero(std::max<Index>(rows, 1), d * d);
  Index r = 0;
  for (const auto& b : blocks) {
    system.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  Nullspace ns = nullspace(system, tol.svd_kappa());
  for (Index k = 0; k < ns.basis.cols(); ++k) out.basis.push_back(unvec(ns.basis.col(k), d, d));
  return out;
}

double system_residual(const SubspaceSystem& s, const Matrix& t) {
  double r = 0.0;
  for (const auto& q : s.subspaces()) {
    if (q.cols() == 0) continue;
    Matrix moved = t * q;
    r = std::max(r, (moved - q * (q.adjoint() * moved)).norm());
  }
  return r;
}

SubspaceSystem from_operator(const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) throw ValidationError("operator must be square");
  const Index k = a.rows();
  const Matrix id = Matrix::Identity(k, k);
  Matrix e1 = Matrix::Zero(2 * k, k), e2 = Matrix::Zero(2 * k, k);
  Matrix e3(2 * k, k), e4(2 * k, k);
  e1.topRows(k) = id;
  e2.bottomRows(k) = id;
  e3 << id, a;
  e4 << id, id;
  return SubspaceSystem(2 * k, {e1, e2, e3, e4}, tol);
}

Representation system_to_rep(const SubspaceSystem& s) {
  const int n = static_cast<int>(s.size());
  std::vector<Index> dims;
  for (const auto& q : s.subspaces()) dims.push_back(q.cols());
  dims.push_back(s.ambient());
  return Representation(Quiver::subspace(n), std::move(dims), s.subspaces());
}

SubspaceSystem rep_to_system(const Representation& rep, const Tolerances& tol) {
  const Quiver& q = rep.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.is_loop(a))
      throw ValidationError("arrow '" + q.arrows()[a].name +
                            "' is a self-loop; apply remove_loops first");
  const Index d = rep.total_dim();
  const auto off = rep.offsets();
  std::vector<Matrix> subspaces;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix e = Matrix::Zero(d, rep.dim(v));
    e.middleRows(off[v], rep.dim(v)).setIdentity();
    subspaces.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.source_index(a);
    const auto r = q.target_index(a);
    Matrix g = Matrix::Zero(d, rep.dim(s));
    g.middleRows(off[s], rep.dim(s)).setIdentity();
    g.middleRows(off[r], rep.dim(r)) = rep.map(a);
    subspaces.push_back(std::move(g));
  }
  return SubspaceSystem(d, std::move(subspaces), tol);
}

Representation remove_loops(const Representation& rep) {
  const Quiver& q = rep.quiver();
  if (!q.has_loops()) return rep;

  std::set<std::string> taken(q.vertices().begin(), q.vertices().end());
  for (const auto& a : q.arrows()) taken.insert(a.name);
  auto fresh = [&taken](std::string name, const std::string& suffix) {
    while (taken.count(name)) name += suffix;
    taken.insert(name);
    return name;
  };

  std::vector<std::string> vertices;
  std::vector<Index> dims;
  std::vector<std::string> primed(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::string& name = q.vertices()[v];
    vertices.push_back(name);
    dims.push_back(rep.dim(v));
    if (!q.loops_at(name).empty()) {
      primed[v] = fresh(name + "'", "'");
      vertices.push_back(primed[v]);
      dims.push_back(rep.dim(v));
    }
  }

  // Identity arrows go right after the last loop at their vertex.
  std::vector<std::size_t> last_loop(q.vertex_count(), q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.is_loop(a)) last_loop[q.source_index(a)] = a;

  std::vector<Arrow> arrows;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    const auto s = q.source_index(a);
    if (q.is_loop(a)) {
      arrows.push_back({arrow.name, arrow.source, primed[s]});
      maps.push_back(rep.map(a));
      if (last_loop[s] == a) {
        arrows.push_back({fresh("id_" + arrow.source, "_"), arrow.source, primed[s]});
        maps.push_back(Matrix::Identity(rep.dim(s), rep.dim(s)));
      }
    } else {
      const std::string source = primed[s].empty() ? arrow.source : primed[s];
      arrows.push_back({arrow.name, source, arrow.target});
      maps.push_back(rep.map(a));
    }
  }
  return Representation(Quiver(std::move(vertices), std::move(arrows)), std::move(dims),
                        std::move(maps));
}

namespace {

void require_preserved(const BridgeCheck& c, const char* what) {
  if (!c.preserved())
    throw NumericalError(std::string(what) + " changed the End dimension from " +
                         std::to_string(c.before) + " to " + std::to_string(c.after));
}

}  // namespace

SystemConversion rep_to_system_checked(const Representation& rep, const Tolerances& tol) {
  SubspaceSystem s = rep_to_system(rep, tol);
  BridgeCheck c{end(rep, tol).dimension(), system_end(s, tol).dimension()};
  require_preserved(c, "rep_to_system");
  return {std::move(s), c};
}

RepConversion system_to_rep_checked(const SubspaceSystem& s, const Tolerances& tol) {
  Representation rep = system_to_rep(s);
  BridgeCheck c{system_end(s, tol).dimension(), end(rep, tol).dimension()};
  require_preserved(c, "system_to_rep");
  return {std::move(rep), c};
}

RepConversion remove_loops_checked(const Representation& rep, const Tolerances& tol) {
  Representation out = remove_loops(rep);
  BridgeCheck c{end(rep, tol).dimension(), end(out, tol).dimension()};
  require_preserved(c, "remove_loops");
  return {std::move(out), c};
}

SystemConversion from_operator_checked(const Matrix& a, const Tolerances& tol) {
  SubspaceSystem s = from_operator(a, tol);
  BridgeCheck c{commutant_dim(a, tol), system_end(s, tol).dimension()};
  require_preserved(c, "from_operator");
  return {std::move(s), c};
}

Index commutant_dim(const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) throw ValidationError("operator must be square");
  if (a.rows() == 0) return 0;
  return end(loop_representation({a}), tol).dimension();
}

Matrix embed_endomorphism(const Representation& rep, const VertexTuple& t) {
  if (t.size() != rep.quiver().vertex_count())
    throw ValidationError("endomorphism needs one block per vertex");
  return block_diagonal(t);
}

VertexTuple restrict_endomorphism(const SubspaceSystem& s, const Matrix& phi) {
  if (phi.rows() != s.ambient() || phi.cols() != s.ambient())
    throw ValidationError("system endomorphism has the wrong shape");
  VertexTuple out;
  for (const auto& q : s.subspaces()) out.push_back(q.adjoint() * phi * q);
  out.push_back(phi);
  return out;
}

}  // namespace qrep
