#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace shapfx {

enum class FgmMargin { Uniform, UnitExponential };

double fgm_margin_cdf(FgmMargin margin, double x);
double fgm_margin_quantile(FgmMargin margin, double u);
double fgm_margin_mean(FgmMargin margin);
double fgm_margin_variance(FgmMargin margin);

/// Inverse of the conditional CDF t + a(t - t^2) on [0, 1], where
/// t is the margin-CDF level of the dependent coordinate and
/// a = theta * (1 - 2 F1(x1)). Uses the root form 2v / ((1+a) + sqrt(...)),
/// which stays fully accurate as a -> 0.
double fgm_conditional_quantile_level(double a, double v);

/// n pairs from the bivariate family with density
/// c_theta(F1(x1), F2(x2)) f1(x1) f2(x2), c_theta(u, v) = 1 + theta(1-2u)(1-2v).
/// The first coordinate comes straight off the margin; the second inverts the
/// conditional CDF. Deterministic per seed.
Eigen::Matrix<double, Eigen::Dynamic, 2> fgm_sample(double theta, FgmMargin margin, int n,
                                                    std::uint64_t seed);

/// E(x2 | x1) for the family above. Linear in x1 for uniform margins:
/// (theta/3) x1 + (1/2 - theta/6). For unit-exponential margins:
/// 1 + theta/2 - theta exp(-x1).
double fgm_conditional_mean(FgmMargin margin, double theta, double x1);

}  // namespace shapfx
