#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gex/covariance.hpp"
#include "gex/lattice.hpp"

namespace gex {

// One realization of the field on the window Gamma_{n+margin}. The margin
// rows exist so window sums that reach t + v for t in Gamma_n stay inside
// the sampled box (margin 1 covers t +- e_w; pattern sums over Gamma_{2k+1}
// need margin 2k+1).
struct FieldSample {
  int d = 1;
  int n = 0;
  int margin = 1;
  std::uint64_t seed = 0;
  std::uint64_t model_fingerprint = 0;
  Eigen::VectorXd values;  // indexed by Window{d, n+margin}

  Window box() const { return Window{d, n + margin}; }
  double at(const Point& p) const { return values[box().index(p)]; }

  std::string to_csv() const;  // columns t_1..t_d,value
};

struct CovarianceDiagnostic {
  bool ok = false;
  double min_eigenvalue_estimate = 0.0;
  std::string path;  // "dense" or "circulant"
};

struct SamplerOptions {
  int margin = 1;
  std::int64_t dense_limit = 4096;   // max window size for the dense path
  double psd_tol = 1e-10;            // relative to the largest eigenvalue
};

// Checks positive semidefiniteness of the covariance restricted to the
// sampled window. Dense path: symmetric eigensolve of the full matrix.
// Circulant path: torus spectrum must be >= -tol relative to its maximum.
// Throws NotPositiveSemidefinite / EmbeddingFailed.
CovarianceDiagnostic validate_window_covariance(
    const CovarianceModel& model, int n, const SamplerOptions& opts = {});

// Draws one field. Marginals N(0,1); covariance exact on the window (dense
// Cholesky) or exact on the embedding torus restricted to the window
// (circulant path). Pure function of (model, n, seed, opts).
FieldSample sample_field(const CovarianceModel& model, int n,
                         std::uint64_t seed, const SamplerOptions& opts = {});

// Excursion vertex set {t in Gamma_n : X_t >= u}, lexicographically sorted.
std::vector<Point> excursion_vertices(const FieldSample& sample, double u);

// Dense covariance matrix of the window (helper shared with tests).
Eigen::MatrixXd window_covariance_matrix(const CovarianceModel& model,
                                         const Window& w);

}  // namespace gex
