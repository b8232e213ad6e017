#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "shapfx/index_set.hpp"

namespace shapfx {

/// A cooperative game on d players: a deterministic map from coalitions to
/// real value. The empty coalition is worth exactly 0 by construction; the
/// wrapped evaluator is never consulted for it.
class ValueFunction {
 public:
  ValueFunction(int dimension, std::function<double(const IndexSet&)> eval);

  int dimension() const noexcept { return d_; }
  double operator()(const IndexSet& u) const;

 private:
  int d_;
  std::function<double(const IndexSet&)> eval_;
};

/// Per-variable attributions plus the grand-coalition value they partition.
struct ShapleyResult {
  Eigen::VectorXd phi;       // phi(j-1) is the attribution of variable j
  double total = 0.0;        // val(1:d)
  std::int64_t calls = 0;    // distinct coalition evaluations performed
};

/// Weight (1/d) * C(d-1, k)^-1 attached to each size-k coalition not
/// containing the focal player. Summed against C(d-1, k) coalitions per size,
/// the weights add to exactly 1.
double shapley_weight(int d, int k);

/// Exact attribution by subset enumeration. Every coalition value is computed
/// once and memoized; accumulation runs in ascending bitmask order with
/// compensated sums, so results do not depend on scheduling. Requires d <= 25.
ShapleyResult shapley_exact(const ValueFunction& val);

/// Exact attribution by averaging marginal contributions over all d! player
/// orders. Agrees with shapley_exact to roundoff; kept as an independent
/// engine for cross-checking. Requires d <= 9.
ShapleyResult shapley_permutation(const ValueFunction& val);

/// Attribution from a dense table of coalition values indexed by bitmask
/// (table[0] must be 0). This is the kernel shared by shapley_exact and the
/// Monte Carlo estimator.
Eigen::VectorXd shapley_from_value_table(const std::vector<double>& table, int d);

/// Diagnostic report from replaying a game against its attribution.
/// Detection of dummies and interchangeable pairs scans all coalitions, so
/// this is a test-scale utility.
struct AxiomReport {
  bool efficiency_pass = false;
  double efficiency_gap = 0.0;                     // |sum(phi) - total|
  bool dummy_pass = true;
  std::vector<int> dummy_players;                  // detected by coalition scan
  bool symmetry_pass = true;
  std::vector<std::pair<int, int>> symmetric_pairs;

  bool all_pass() const { return efficiency_pass && dummy_pass && symmetry_pass; }
};

/// efficiency_tol and phi_tol scale with max(1, |total|). detect_tol is the
/// slack used when scanning coalition values for dummies/symmetric pairs;
/// 0 demands bitwise equality (appropriate for table games).
AxiomReport check_axioms(const ValueFunction& val, const ShapleyResult& result,
                         double efficiency_tol = 1e-9, double phi_tol = 1e-12,
                         double detect_tol = 0.0);

}  // namespace shapfx
