#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "shapfx/game.hpp"
#include "shapfx/index_set.hpp"

namespace shapfx {

struct DiscreteAtom {
  Eigen::VectorXd x;  // input point, d coordinates
  double p = 0.0;     // probability mass
  double y = 0.0;     // output f(x)
};

/// Finite-support joint distribution of (x, y). Grouping keys use exact
/// coordinate equality; quantize continuous data before building one.
class DiscreteJoint {
 public:
  explicit DiscreteJoint(std::vector<DiscreteAtom> atoms);

  int dimension() const noexcept { return d_; }
  const std::vector<DiscreteAtom>& atoms() const noexcept { return atoms_; }
  double output_mean() const;
  double output_variance() const;

 private:
  std::vector<DiscreteAtom> atoms_;
  int d_ = 0;
};

/// The explained-variance game val(u) = var(E(y | x_u)), computed exactly by
/// grouping atoms on their u-coordinates. This is the library's brute-force
/// reference for every finite-support closed form.
ValueFunction discrete_value_function(const DiscreteJoint& joint);

/// Relabel coordinate j through an injective map (injectivity is checked on
/// the observed values). Attributions downstream are unchanged.
DiscreteJoint bijection_transform(const DiscreteJoint& joint, int j,
                                  const std::function<double(double)>& relabel);

}  // namespace shapfx
