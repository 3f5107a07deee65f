#pragma once

#include <Eigen/Core>

#include "alignaug/cpa_basis.hpp"
#include "alignaug/rng.hpp"

namespace alignaug {

// Squared-exponential kernel over triangle centroids; amplitude is the
// variance of each affine coefficient, lengthscale the correlation distance
// in domain units.
struct PriorConfig {
  double lengthscale = 0.1;
  double amplitude = 0.01;
};

// Zero-mean Gaussian over tangent coordinates theta, obtained by projecting
// the unconstrained piecewise-affine prior onto the constrained subspace.
struct ThetaPrior {
  Eigen::MatrixXd covariance;  // d x d, symmetric PSD
  Eigen::MatrixXd chol;        // lower Cholesky factor (jittered if needed)
  double log_det = 0.0;        // log det of the factored matrix

  int dim() const { return static_cast<int>(covariance.rows()); }
  // Scale of a typical draw: sqrt E ||theta||^2.
  double sd_norm() const { return std::sqrt(covariance.trace()); }
};

// D x D block covariance over affine stacks: block (i, j) is
// amplitude * exp(-||c_i - c_j||^2 / (2 lengthscale^2)) * I_6 for triangle
// centroids c_i, c_j.
Eigen::MatrixXd build_pa_covariance(const Tessellation& tess, const PriorConfig& cfg);

// covariance = B^T Sigma_PA B, symmetrized; Cholesky cached, with one
// jittered retry (1e-10 * trace/d on the diagonal). Throws numerical_error
// if the matrix is not positive definite beyond jitter.
ThetaPrior project_prior(const Eigen::MatrixXd& sigma_pa, const CpaBasis& basis);

// Convenience: kernel construction plus projection.
ThetaPrior build_theta_prior(const CpaBasis& basis, const PriorConfig& cfg);

// Draw theta = L z with z standard normal from the caller's generator.
Eigen::VectorXd sample_prior(const ThetaPrior& prior, Rng& rng);

// log N(theta; 0, covariance), normalization constant included.
double log_prior_density(const Eigen::VectorXd& theta, const ThetaPrior& prior);

}  // namespace alignaug
