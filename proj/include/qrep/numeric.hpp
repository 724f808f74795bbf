#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// One matrix per vertex, in the quiver's vertex order.
using VertexTuple = std::vector<Matrix>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad shapes, unknown names, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical decision could not be made or a post-condition check failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Thresholds used by every rank, residual and clustering decision.
///
/// All relative factors are multiplied by `scale` (the CLI's --tol-scale),
/// except `kappa`, which already enters the SVD threshold multiplicatively.
struct Tolerances {
  double kappa = 10.0;         // nullspace: sigma <= max(m,n) * eps * sigma_max * kappa
  double hom = 1e-8;           // intertwining residual, relative to the largest arrow norm
  double range = 1e-9;         // subrepresentation invariance residual, relative
  double inv = 1e-8;           // invertibility: sigma_min >= inv * sigma_max
  double cluster = 1e-6;       // eigenvalue clustering, relative to spectral radius
  double idempotent = 1e-6;    // ||P^2 - P|| <= idempotent * ||P||
  double algebra = 1e-9;       // span-closure residual for generated algebras
  double weight_floor = 1e-8;  // smallest admissible realized weight
  double scale = 1.0;
  int iso_samples = 8;
  int max_tries = 16;
  std::uint64_t seed = 0;
  Index size_limit = 250000;   // total intertwiner unknowns

  double tau_hom() const { return hom * scale; }
  double tau_range() const { return range * scale; }
  double tau_inv() const { return inv * scale; }
  double tau_cluster() const { return cluster * scale; }
  double tau_idempotent() const { return idempotent * scale; }
  double tau_algebra() const { return algebra * scale; }
  double svd_kappa() const { return kappa * scale; }
};

/// Seeded complex Gaussian sampler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return dist_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  Matrix matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
    return m;
  }
  std::vector<Complex> coefficients(std::size_t n) {
    std::vector<Complex> c(n);
    for (auto& x : c) x = complex_normal();
    return c;
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace qrep
