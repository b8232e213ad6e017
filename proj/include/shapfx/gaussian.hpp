#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shapfx/index_set.hpp"

namespace shapfx {

/// Law of x_{-u} given x_u for x ~ N(mu, Sigma). The covariance is the Schur
/// complement Sigma_{-u,-u} - Sigma_{-u,u} Sigma_uu^{-1} Sigma_{u,-u} and does
/// not depend on the conditioning value; only the mean does.
class GaussianConditional {
 public:
  GaussianConditional(const Eigen::VectorXd& mu, const Eigen::MatrixXd& sigma,
                      const IndexSet& u);

  const IndexSet& conditioned_on() const noexcept { return u_; }
  /// Free (non-conditioned) variables, ascending, 1-based.
  const std::vector<int>& free_variables() const noexcept { return free_; }

  /// Conditional covariance of the free variables, in free_variables() order.
  const Eigen::MatrixXd& covariance() const noexcept { return cov_; }

  /// Conditional mean of the free variables given the conditioning values
  /// (one entry per member of u, ascending order).
  Eigen::VectorXd mean(const Eigen::VectorXd& x_u) const;

  /// var(x_j | x_u) for a free variable j (1-based).
  double variance_of(int j) const;

 private:
  IndexSet u_;
  std::vector<int> free_;
  Eigen::VectorXd mu_free_, mu_cond_;
  Eigen::MatrixXd gain_;  // Sigma_{-u,u} Sigma_uu^{-1}
  Eigen::MatrixXd cov_;
};

/// Factory checked against Sigma_uu positive definiteness.
GaussianConditional gaussian_condition(const Eigen::VectorXd& mu,
                                       const Eigen::MatrixXd& sigma, const IndexSet& u);

/// Symmetric PSD square root via eigendecomposition (eigenvalues clamped at
/// zero), used for sampling from conditional laws that may be near-singular.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& a);

}  // namespace shapfx
