#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "shapfx/game.hpp"
#include "shapfx/index_set.hpp"

namespace shapfx {

/// One independent input axis: a finite support with its probability weights.
struct GridAxis {
  Eigen::VectorXd values;
  Eigen::VectorXd weights;  // strictly positive, summing to 1 within 1e-12
};

/// Product distribution of d independent finite-support inputs. Dense tables
/// over the grid are stored flat in C order: the last axis varies fastest.
class ProductGrid {
 public:
  explicit ProductGrid(std::vector<GridAxis> axes);

  int dimension() const noexcept { return static_cast<int>(axes_.size()); }
  const GridAxis& axis(int var) const;            // var is 1-based
  int levels(int var) const;
  std::int64_t point_count() const noexcept { return n_points_; }
  std::int64_t stride(int var) const;

  /// Probability of one grid point (product of axis weights), flat index.
  double point_weight(std::int64_t flat) const;

  /// Level index of `var` at a flat position.
  int level_at(std::int64_t flat, int var) const;

  /// Weighted average over every axis NOT in `keep`, returned as a dense
  /// table constant along the averaged axes. keep = empty gives the constant
  /// mean table; keep = full returns the input unchanged.
  Eigen::VectorXd marginalize(const Eigen::VectorXd& table, const IndexSet& keep) const;

  /// Weighted mean of a dense table under the product measure.
  double mean(const Eigen::VectorXd& table) const;

 private:
  std::vector<GridAxis> axes_;
  std::vector<std::int64_t> strides_;
  std::int64_t n_points_ = 1;
};

/// Orthogonal effect decomposition of a tabulated function of independent
/// inputs: f = sum_u f_u with E[f_u f_v] = 0 for u != v, plus the variance
/// components sigma2_u = E[f_u^2].
class AnovaDecomposition {
 public:
  AnovaDecomposition(ProductGrid grid, std::vector<Eigen::VectorXd> effects,
                     Eigen::VectorXd components);

  const ProductGrid& grid() const noexcept { return grid_; }
  int dimension() const noexcept { return grid_.dimension(); }
  double mean() const;                                // f_empty (a constant table)
  const Eigen::VectorXd& effect(const IndexSet& u) const;
  double component(const IndexSet& u) const;          // sigma2_u
  double total_variance() const noexcept { return total_variance_; }

 private:
  ProductGrid grid_;
  std::vector<Eigen::VectorXd> effects_;    // indexed by coalition bitmask
  Eigen::VectorXd components_;
  double total_variance_ = 0.0;
};

/// Recursive effect extraction: f_u is the conditional mean given x_u minus
/// every lower-order effect. d <= 12.
AnovaDecomposition anova_decompose(const Eigen::VectorXd& table, const ProductGrid& grid);

/// Variance explained by x_u: sum of components over subsets of u.
double sobol_lower(const AnovaDecomposition& dec, const IndexSet& u);

/// Variance of every term touching u: sum over coalitions intersecting u.
double sobol_upper(const AnovaDecomposition& dec, const IndexSet& u);

/// Attribution directly from variance components: variable j receives
/// sigma2_u / |u| from every coalition containing it.
ShapleyResult shapley_from_components(const AnovaDecomposition& dec);

/// The game val(u) = sobol_lower(u), for cross-checking against the exact
/// enumeration engines.
ValueFunction explained_variance_game(const AnovaDecomposition& dec);

}  // namespace shapfx
