#include "qrep/operators.hpp"

#include "qrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qrep {

Matrix shift(Index n) {
  if (n < 1) throw ValidationError("shift needs N >= 1");
  Matrix s = Matrix::Zero(n, n);
  for (Index j = 0; j + 1 < n; ++j) s(j + 1, j) = 1.0;
  return s;
}

Matrix bilateral_shift(Index n) {
  if (n < 1) throw ValidationError("bilateral shift needs N >= 1");
  return shift(2 * n + 1);
}

Matrix diagonal(const Vector& v) { return v.asDiagonal(); }

Matrix rank_one(const Vector& a, const Vector& b) { return a * b.adjoint(); }

Matrix weighted_shift(const Vector& weights) {
  const Index n = weights.size() + 1;
  Matrix w = Matrix::Zero(n, n);
  for (Index k = 0; k + 1 < n; ++k) w(k + 1, k) = weights(k);
  return w;
}

Representation perturbation_model(Index n, const Vector& lambda, const Vector& w) {
  if (n < 1) throw ValidationError("perturbation model needs N >= 1");
  if (lambda.size() != n || w.size() != n)
    throw ValidationError("perturbation model needs " + std::to_string(n) +
                          " lambda and w entries");
  for (Index i = 0; i < n; ++i) {
    if (w(i) == Complex(0.0))
      throw ValidationError("w_" + std::to_string(i + 1) + " must be nonzero");
    for (Index j = 0; j < i; ++j)
      if (lambda(i) == lambda(j))
        throw ValidationError("lambda entries " + std::to_string(j + 1) + " and " +
                              std::to_string(i + 1) + " coincide");
  }
  const Matrix s = shift(n);
  const Vector e1 = Vector::Unit(n, 0);
  Matrix t = s * diagonal(lambda) + rank_one(e1, w.conjugate());
  return kronecker_representation({s, t});
}

Representation perturbation_model(Index n) {
  if (n < 1) throw ValidationError("perturbation model needs N >= 1");
  Vector lambda(n), w(n);
  for (Index k = 1; k <= n; ++k) {
    lambda(k - 1) = 1.0 + static_cast<double>(k) / static_cast<double>(n);
    w(k - 1) = 1.0 / static_cast<double>(k);
  }
  return perturbation_model(n, lambda, w);
}

double perturbation_structure_residual(const VertexTuple& t) {
  if (t.size() != 2) throw ValidationError("expected an End element with two blocks");
  const Matrix& phi = t[0];
  const Matrix& psi = t[1];
  const Index n = psi.rows();
  double r = 0.0;
  for (Index j = 1; j < n; ++j) r = std::max(r, std::abs(psi(0, j)));
  for (Index i = 1; i < n; ++i) r = std::max(r, std::abs(psi(i, 0)));
  for (Index i = 0; i + 1 < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j) r = std::max(r, std::abs(phi(i, j)));
  return r;
}

double HrrWeights::a(Index index) const { return std::exp(log_a.at(index + n)); }
double HrrWeights::b(Index index) const { return std::exp(log_b.at(index + n)); }
double HrrWeights::log_w(Index index) const { return log_b.at(index + n) - log_a.at(index + n); }

HrrWeights hrr_weights(Index n, double lambda) {
  HrrWeights w;
  w.n = n;
  w.lambda = lambda;
  w.log_a.assign(2 * n + 1, 0.0);
  w.log_b.assign(2 * n + 1, 0.0);
  for (Index k = 1; k <= n; ++k) {
    const double v = -std::pow(lambda, static_cast<double>(k));
    if (k % 2 == 0)
      w.log_a[k + n] = v;
    else
      w.log_b[k + n] = v;
  }
  return w;
}

Index hrr_max_admissible_n(double lambda, double weight_floor) {
  if (!(lambda > 1.0)) throw ValidationError("lambda must exceed 1");
  const double budget = std::log(1.0 / weight_floor);
  if (budget < lambda) return 0;
  Index n = static_cast<Index>(std::floor(std::log(budget) / std::log(lambda)));
  while (n > 0 && std::pow(lambda, static_cast<double>(n)) > budget) --n;
  while (std::pow(lambda, static_cast<double>(n + 1)) <= budget) ++n;
  return n;
}

HrrModel hrr_model(Index n, double lambda, const Tolerances& tol) {
  if (!(lambda > 1.0)) throw ValidationError("lambda must exceed 1");
  if (n < 1) throw ValidationError("hrr model needs N >= 1");
  const Index max_n = hrr_max_admissible_n(lambda, tol.weight_floor);
  if (n > max_n) {
    std::ostringstream os;
    os << "N = " << n << " underflows the weight floor " << tol.weight_floor
       << " for lambda = " << lambda << "; max admissible N is " << max_n;
    throw ValidationError(os.str());
  }
  HrrWeights w = hrr_weights(n, lambda);
  const Index d = 2 * n + 1;
  Vector a(d), b(d);
  for (Index i = 0; i < d; ++i) {
    a(i) = std::exp(w.log_a[i]);
    b(i) = std::exp(w.log_b[i]);
  }
  Representation rep = kronecker_representation({diagonal(a), bilateral_shift(n) * diagonal(b)});
  return {std::move(rep), std::move(w)};
}

double range_surrogate(const Representation& rep) {
  if (rep.maps().empty()) throw ValidationError("representation has no arrows");
  Eigen::VectorXd s = singular_values(rep.map(0));
  if (s.size() == 0 || s(0) == 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

bool RecursionReport::all_passed() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const RecursionCheck& c) { return c.passed; });
}

double RecursionReport::pass_rate() const {
  if (elements.empty()) return 1.0;
  const auto n = std::count_if(elements.begin(), elements.end(),
                               [](const RecursionCheck& c) { return c.passed; });
  return static_cast<double>(n) / static_cast<double>(elements.size());
}

namespace {

// Residuals of the cross recursion for T : hrr(lambda) -> hrr(mu), indices
// shifted by N. Equal weights give the End checks.
RecursionCheck check_element(const HrrWeights& from, const HrrWeights& to, const VertexTuple& t,
                             double bound) {
  const Index n = from.n;
  const Matrix& t1 = t[0];
  const Matrix& t2 = t[1];
  RecursionCheck c;
  for (Index m = -n; m < n; ++m)
    for (Index k = -n; k < n; ++k) {
      const Complex lhs = to.a(m) * from.b(k) * t2(m + 1 + n, k + 1 + n);
      const Complex rhs = to.b(m) * from.a(k) * t2(m + n, k + n);
      c.recursion_residual = std::max(c.recursion_residual, std::abs(lhs - rhs));
    }
  for (Index m = -n; m <= n; ++m)
    for (Index k = -n; k <= n; ++k)
      c.coupling_residual =
          std::max(c.coupling_residual,
                   std::abs(to.a(m) * t1(m + n, k + n) - from.a(k) * t2(m + n, k + n)));
  for (Index k = -n; k < n; ++k)
    c.diagonal_residual =
        std::max(c.diagonal_residual, std::abs(t2(k + 1 + n, k + 1 + n) - t2(k + n, k + n)));
  c.passed = c.recursion_residual <= bound && c.coupling_residual <= bound;
  return c;
}

}  // namespace

RecursionReport end_recursion_check(const HrrModel& model, const Tolerances& tol) {
  return end_recursion_check(model, end(model.rep, tol), tol);
}

RecursionReport end_recursion_check(const HrrModel& model, const HomBasis& basis,
                                    const Tolerances& tol) {
  RecursionReport report;
  report.n = model.weights.n;
  report.lambda = model.weights.lambda;
  report.end_dim = basis.dimension();
  report.tolerance = tol.tau_hom() * std::max(1.0, model.rep.scale());
  for (const auto& t : basis.basis) {
    RecursionCheck c = check_element(model.weights, model.weights, t, report.tolerance);
    c.passed = c.passed && c.diagonal_residual <= report.tolerance;
    report.elements.push_back(c);
  }
  return report;
}

CrossHomReport cross_model_hom(double lambda, double mu, Index n, const Tolerances& tol) {
  HrrModel from = hrr_model(n, lambda, tol);
  HrrModel to = hrr_model(n, mu, tol);
  HomBasis basis = hom(from.rep, to.rep, tol);
  CrossHomReport report;
  report.n = n;
  report.lambda = lambda;
  report.mu = mu;
  report.hom_dim = basis.dimension();
  report.tolerance = tol.tau_hom() * std::max({1.0, from.rep.scale(), to.rep.scale()});
  for (const auto& t : basis.basis) {
    RecursionCheck c = check_element(from.weights, to.weights, t, report.tolerance);
    report.max_recursion_residual =
        std::max({report.max_recursion_residual, c.recursion_residual, c.coupling_residual});
  }
  report.recursion_holds = report.max_recursion_residual <= report.tolerance;
  return report;
}

SimilarityEvidence weighted_shift_similarity(std::span<const Complex> a,
                                             std::span<const Complex> b, Index n) {
  if (n < 1) throw ValidationError("similarity check needs N >= 1");
  if (a.size() < static_cast<std::size_t>(n) || b.size() < static_cast<std::size_t>(n))
    throw ValidationError("need at least N weights in both sequences");
  SimilarityEvidence ev;
  double acc = 0.0;
  for (Index k = 0; k < n; ++k) {
    if (b[k] == Complex(0.0))
      throw ValidationError("b weight " + std::to_string(k + 1) + " is zero");
    acc += std::log(std::abs(a[k])) - std::log(std::abs(b[k]));
    ev.log_ratios.push_back(acc);
  }
  ev.log_ratio_min = *std::min_element(ev.log_ratios.begin(), ev.log_ratios.end());
  ev.log_ratio_max = *std::max_element(ev.log_ratios.begin(), ev.log_ratios.end());
  ev.ratio_min = std::exp(ev.log_ratio_min);
  ev.ratio_max = std::exp(ev.log_ratio_max);
  ev.bounded_so_far = std::isfinite(ev.log_ratio_min) && std::isfinite(ev.log_ratio_max);
  return ev;
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Index param_n(const std::map<std::string, double>& params, Index fallback) {
  const double v = param(params, "N", static_cast<double>(fallback));
  if (v < 1 || v != std::floor(v)) throw ValidationError("N must be a positive integer");
  return static_cast<Index>(v);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"ex1", "ex2", "ex3", "ex4", "ex6", "ex7", "ex8", "ex8*", "ex9"};
}

bool example_is_truncation(const std::string& name) {
  return name == "ex2" || name == "ex3" || name == "ex4" || name == "ex8" || name == "ex8*" ||
         name == "ex9";
}

Representation example_rep(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "ex1") {
    const double theta = param(params, "theta", std::numbers::pi / 4);
    Matrix e1(2, 1), e2(2, 1);
    e1 << 1.0, 0.0;
    e2 << std::cos(theta), std::sin(theta);
    return Representation(Quiver::two_inclusions(), {1, 1, 2}, {e1, e2});
  }
  if (name == "ex2") return loop_representation({shift(param_n(params, 4))});
  if (name == "ex3") {
    Matrix s = shift(param_n(params, 4));
    return loop_representation({s, s.adjoint()});
  }
  if (name == "ex4") {
    const Index n = param_n(params, 4);
    Matrix s = shift(n);
    return Representation(Quiver::kronecker(3), {n, n}, {s, s.adjoint(), Matrix::Identity(n, n)});
  }
  if (name == "ex6" || name == "ex7") {
    Matrix e11 = Matrix::Zero(2, 2);
    e11(0, 0) = 1.0;
    Matrix other = Matrix::Zero(2, 2);
    if (name == "ex6")
      other(0, 1) = 1.0;
    else
      other.setOnes();
    return loop_representation({e11, other});
  }
  if (name == "ex8" || name == "ex8*") {
    const Index n = param_n(params, 4);
    const Complex lambda = param(params, "lambda", 2.0);
    Matrix s = shift(n);
    if (name == "ex8*") s.adjointInPlace();
    Matrix id = Matrix::Identity(n, n);
    return kronecker_representation({id, lambda * id + s});
  }
  if (name == "ex9") {
    Matrix s = shift(param_n(params, 4));
    return kronecker_representation({s, s.adjoint()});
  }
  std::string known;
  for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown example '" + name + "' (known: " + known + ")");
}

}  // namespace qrep
