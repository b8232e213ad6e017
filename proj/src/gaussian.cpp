#include "shapfx/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shapfx {

namespace {

Eigen::MatrixXd pick(const Eigen::MatrixXd& sigma, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out(r, c) = sigma(rows[r] - 1, cols[c] - 1);
  return out;
}

Eigen::VectorXd pick(const Eigen::VectorXd& v, const std::vector<int>& idx) {
  Eigen::VectorXd out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out(i) = v(idx[i] - 1);
  return out;
}

}  // namespace

GaussianConditional::GaussianConditional(const Eigen::VectorXd& mu,
                                         const Eigen::MatrixXd& sigma, const IndexSet& u)
    : u_(u) {
  const int d = static_cast<int>(mu.size());
  if (sigma.rows() != d || sigma.cols() != d) {
    throw std::invalid_argument("mu/Sigma dimension mismatch");
  }
  if (u.dimension() != d) throw std::invalid_argument("conditioning set dimension mismatch");

  const std::vector<int> cond = u.members();
  free_ = u.complement().members();
  mu_free_ = pick(mu, free_);
  mu_cond_ = pick(mu, cond);

  if (cond.empty()) {
    gain_.resize(free_.size(), 0);
    cov_ = sigma;
    return;
  }

  const Eigen::MatrixXd s_cc = pick(sigma, cond, cond);
  const Eigen::MatrixXd s_fc = pick(sigma, free_, cond);
  Eigen::LLT<Eigen::MatrixXd> llt(s_cc);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("conditioning block of Sigma is not positive definite");
  }
  gain_ = llt.solve(s_fc.transpose()).transpose();  // Sigma_{-u,u} Sigma_uu^{-1}
  if (free_.empty()) {
    cov_.resize(0, 0);
    return;
  }
  cov_ = pick(sigma, free_, free_) - gain_ * s_fc.transpose();
  cov_ = 0.5 * (cov_ + cov_.transpose().eval());  // resymmetrize roundoff
}

Eigen::VectorXd GaussianConditional::mean(const Eigen::VectorXd& x_u) const {
  if (x_u.size() != static_cast<Eigen::Index>(u_.size())) {
    throw std::invalid_argument("conditioning value size mismatch");
  }
  if (u_.is_empty()) return mu_free_;
  return mu_free_ + gain_ * (x_u - mu_cond_);
}

double GaussianConditional::variance_of(int j) const {
  const auto it = std::find(free_.begin(), free_.end(), j);
  if (it == free_.end()) throw std::invalid_argument("variable is not free");
  const Eigen::Index k = it - free_.begin();
  return cov_(k, k);
}

GaussianConditional gaussian_condition(const Eigen::VectorXd& mu,
                                       const Eigen::MatrixXd& sigma, const IndexSet& u) {
  return GaussianConditional(mu, sigma, u);
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw std::domain_error("eigendecomposition failed");
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace shapfx
