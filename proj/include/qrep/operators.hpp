#pragma once

#include "qrep/intertwiner.hpp"
#include "qrep/numeric.hpp"
#include "qrep/representation.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace qrep {

// Finite compressions P_N T P_N of operators on l2(N) and l2(Z).

/// Unilateral shift on C^N: e_j -> e_{j+1}, e_N -> 0.
Matrix shift(Index n);

/// Bilateral shift compressed to indices -N..N (size 2N+1), e_N -> 0.
Matrix bilateral_shift(Index n);

Matrix diagonal(const Vector& v);

/// x -> (x|b) a, i.e. a b^*.
Matrix rank_one(const Vector& a, const Vector& b);

/// Kronecker representation (S, S D_lambda + theta_{e1, conj(w)}): a weighted
/// shift perturbed by a rank-one operator whose first row is w.
/// Requires pairwise distinct lambda and nonzero w.
Representation perturbation_model(Index n, const Vector& lambda, const Vector& w);

/// lambda_k = 1 + k/N and w_k = 1/k.
Representation perturbation_model(Index n);

/// Largest absolute entry of an End element (phi, psi) of the perturbation
/// model on the coordinates that must vanish: psi_{1,j} (j >= 2),
/// psi_{i,1} (i >= 2) and phi_{i,j} (i != j, i <= N-1), 1-based.
double perturbation_structure_residual(const VertexTuple& t);

/// Double-exponential weights on indices -N..N, kept in the log domain.
struct HrrWeights {
  Index n = 0;
  double lambda = 0.0;
  std::vector<double> log_a;  // position i <-> index i - N
  std::vector<double> log_b;

  double a(Index index) const;
  double b(Index index) const;
  /// log(b(m) / a(m)).
  double log_w(Index index) const;
};

HrrWeights hrr_weights(Index n, double lambda);

/// Largest N with lambda^N <= ln(1 / weight_floor).
Index hrr_max_admissible_n(double lambda, double weight_floor = 1e-8);

struct HrrModel {
  Representation rep;
  HrrWeights weights;
};

/// Kronecker representation (D_a, U D_b) on C^{2N+1} with
/// a(n) = exp(-lambda^n) for even n >= 1, b(n) = exp(-lambda^n) for odd n >= 1,
/// and 1 otherwise.
HrrModel hrr_model(Index n, double lambda, const Tolerances& tol = {});

/// sigma_min / sigma_max of the first map. Every finite range is closed; this
/// ratio is the stand-in for a non-closed range.
double range_surrogate(const Representation& rep);

/// Per-element outcome of the weight-recursion checks on an End basis element.
struct RecursionCheck {
  double diagonal_residual = 0.0;   // max |t_{n+1,n+1} - t_{n,n}|
  double recursion_residual = 0.0;  // max |a(m)b(n) t_{m+1,n+1} - b(m)a(n) t_{m,n}|
  double coupling_residual = 0.0;   // max |a(m) T1_{mn} - a(n) T2_{mn}|
  bool passed = false;
};

struct RecursionReport {
  Index n = 0;
  double lambda = 0.0;
  Index end_dim = 0;
  double tolerance = 0.0;
  std::vector<RecursionCheck> elements;

  bool all_passed() const;
  double pass_rate() const;
};

/// Checks every End basis element of an HRR model against the structure the
/// intertwining equations force: constant T2 diagonal, the weight recursion at
/// interior index pairs, and the T1/T2 coupling. The recursion and coupling
/// are evaluated with cleared denominators so that every coefficient is <= 1.
RecursionReport end_recursion_check(const HrrModel& model, const Tolerances& tol = {});

/// Same checks on an End basis computed elsewhere.
RecursionReport end_recursion_check(const HrrModel& model, const HomBasis& end_basis,
                                    const Tolerances& tol = {});

struct CrossHomReport {
  Index n = 0;
  double lambda = 0.0;
  double mu = 0.0;
  Index hom_dim = 0;
  double tolerance = 0.0;
  double max_recursion_residual = 0.0;
  bool recursion_holds = false;
};

/// Hom(hrr(N, lambda), hrr(N, mu)) and the cross-weight recursion
/// t_{m+1,n+1} = (w^mu_m / w^lambda_n) t_{m,n} on every basis element.
CrossHomReport cross_model_hom(double lambda, double mu, Index n, const Tolerances& tol = {});

/// Finite-N evidence for similarity of weighted shifts W_a and W_b:
/// r_n = |a_1...a_n| / |b_1...b_n| for n = 1..N. A bounded ratio over a finite
/// range is necessary evidence only.
struct SimilarityEvidence {
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double log_ratio_min = 0.0;
  double log_ratio_max = 0.0;
  std::vector<double> log_ratios;
  bool bounded_so_far = false;  // 0 < min and max/min finite
};

SimilarityEvidence weighted_shift_similarity(std::span<const Complex> a,
                                             std::span<const Complex> b, Index n);

/// Lower weighted shift with W e_k = w_k e_{k+1}; size w.size() + 1.
Matrix weighted_shift(const Vector& weights);

/// Truncated representations from the worked examples. Parameters are read
/// from `params` ("N", "lambda", "theta"); missing ones take defaults.
///   ex1     two inclusions C(1,0), C(cos t, sin t) into C^2 (theta default pi/4)
///   ex2     one loop, S_N
///   ex3     two loops, (S_N, S_N^*)
///   ex4     3-Kronecker, (S_N, S_N^*, I)
///   ex6     two loops, (E11, E12) on C^2
///   ex7     two loops, (E11, all-ones) on C^2
///   ex8     Kronecker, (I, lambda I + S_N)
///   ex8*    Kronecker, (I, lambda I + S_N^*)
///   ex9     Kronecker, (S_N, S_N^*)
Representation example_rep(const std::string& name, const std::map<std::string, double>& params);

std::vector<std::string> example_names();

/// Whether a named example is a finite truncation of an operator on l2.
bool example_is_truncation(const std::string& name);

}  // namespace qrep
