#include "shapfx/numeric.hpp"

#include <stdexcept>

namespace shapfx {

long double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::domain_error("binomial: need 0 <= k <= n");
  if (k > n - k) k = n - k;
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) {
    // integer-valued at every step, so both the multiply and the divide are exact
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  return c;
}

Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& data) {
  const Eigen::Index n = data.rows();
  if (n < 2) throw std::invalid_argument("sample_covariance: need at least 2 rows");
  const Eigen::RowVectorXd mean = data.colwise().mean();
  const Eigen::MatrixXd centered = data.rowwise() - mean;
  return centered.transpose() * centered / static_cast<double>(n - 1);
}

}  // namespace shapfx
