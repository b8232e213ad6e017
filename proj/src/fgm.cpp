#include "shapfx/fgm.hpp"

#include <cmath>
#include <stdexcept>

#include "shapfx/rng.hpp"

namespace shapfx {

namespace {
void check_theta(double theta) {
  if (!(std::abs(theta) <= 1.0)) {
    throw std::domain_error("FGM dependence parameter must satisfy |theta| <= 1");
  }
}
}  // namespace

double fgm_margin_cdf(FgmMargin margin, double x) {
  switch (margin) {
    case FgmMargin::Uniform:
      if (x < 0.0 || x > 1.0) throw std::domain_error("uniform margin support is [0, 1]");
      return x;
    case FgmMargin::UnitExponential:
      if (x < 0.0) throw std::domain_error("exponential margin support is [0, inf)");
      return -std::expm1(-x);
  }
  throw std::invalid_argument("unsupported margin kind");
}

double fgm_margin_quantile(FgmMargin margin, double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile level must lie in (0, 1)");
  switch (margin) {
    case FgmMargin::Uniform:
      return u;
    case FgmMargin::UnitExponential:
      return -std::log1p(-u);
  }
  throw std::invalid_argument("unsupported margin kind");
}

double fgm_margin_mean(FgmMargin margin) {
  return margin == FgmMargin::Uniform ? 0.5 : 1.0;
}

double fgm_margin_variance(FgmMargin margin) {
  return margin == FgmMargin::Uniform ? 1.0 / 12.0 : 1.0;
}

double fgm_conditional_quantile_level(double a, double v) {
  // root of a t^2 - (1+a) t + v in [0, 1]
  const double disc = (1.0 + a) * (1.0 + a) - 4.0 * a * v;
  return 2.0 * v / ((1.0 + a) + std::sqrt(disc));
}

Eigen::Matrix<double, Eigen::Dynamic, 2> fgm_sample(double theta, FgmMargin margin, int n,
                                                    std::uint64_t seed) {
  check_theta(theta);
  if (n < 0) throw std::invalid_argument("sample count must be nonnegative");
  Eigen::Matrix<double, Eigen::Dynamic, 2> out(n, 2);
  RngStream rng(seed, 0);
  for (int i = 0; i < n; ++i) {
    const double u1 = rng.next_unit();
    const double a = theta * (1.0 - 2.0 * u1);
    const double t = fgm_conditional_quantile_level(a, rng.next_unit());
    out(i, 0) = fgm_margin_quantile(margin, u1);
    out(i, 1) = fgm_margin_quantile(margin, t);
  }
  return out;
}

double fgm_conditional_mean(FgmMargin margin, double theta, double x1) {
  check_theta(theta);
  switch (margin) {
    case FgmMargin::Uniform:
      if (x1 < 0.0 || x1 > 1.0) throw std::domain_error("x1 outside the uniform support");
      return theta / 3.0 * x1 + (0.5 - theta / 6.0);
    case FgmMargin::UnitExponential:
      if (x1 < 0.0) throw std::domain_error("x1 outside the exponential support");
      return 1.0 + theta / 2.0 - theta * std::exp(-x1);
  }
  throw std::invalid_argument("unsupported margin kind");
}

}  // namespace shapfx
