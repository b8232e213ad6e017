#pragma once

#include <Eigen/Dense>

namespace shapfx {

/// Kahan compensated accumulator. Alternating-sign sums (inclusion-exclusion,
/// marginal-contribution totals) can cancel badly; compensation keeps the
/// running error near one ulp of the result.
template <typename Scalar = double>
class KahanSum {
 public:
  void add(Scalar x) noexcept {
    const Scalar y = x - carry_;
    const Scalar t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  Scalar value() const noexcept { return sum_; }

 private:
  Scalar sum_ = 0;
  Scalar carry_ = 0;
};

/// C(n, k) by the multiplicative formula in extended precision. Exact for the
/// library's domain (n <= 29 keeps every intermediate below 2^32).
long double binomial(int n, int k);

/// Unbiased sample covariance of a data table, one observation per row.
Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& data);

}  // namespace shapfx
