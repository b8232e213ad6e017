#include "shapfx/anova.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "shapfx/errors.hpp"

namespace shapfx {

namespace {
constexpr int kAnovaCap = 12;
}

ProductGrid::ProductGrid(std::vector<GridAxis> axes) : axes_(std::move(axes)) {
  const int d = dimension();
  if (d < 1 || d > IndexSet::kMaxDimension) {
    throw std::domain_error("ProductGrid needs between 1 and 30 axes");
  }
  for (const GridAxis& ax : axes_) {
    if (ax.values.size() != ax.weights.size() || ax.values.size() == 0) {
      throw std::invalid_argument("axis values/weights must be nonempty and equal length");
    }
    if ((ax.weights.array() <= 0.0).any()) {
      throw std::domain_error("axis weights must be strictly positive");
    }
    if (std::abs(ax.weights.sum() - 1.0) > 1e-12) {
      throw std::domain_error("axis weights must sum to 1 within 1e-12");
    }
  }
  strides_.assign(d, 1);
  for (int a = d - 2; a >= 0; --a) {
    strides_[a] = strides_[a + 1] * axes_[a + 1].values.size();
  }
  n_points_ = strides_[0] * axes_[0].values.size();
}

const GridAxis& ProductGrid::axis(int var) const {
  if (var < 1 || var > dimension()) throw std::domain_error("axis index out of range");
  return axes_[var - 1];
}

int ProductGrid::levels(int var) const { return static_cast<int>(axis(var).values.size()); }

std::int64_t ProductGrid::stride(int var) const {
  if (var < 1 || var > dimension()) throw std::domain_error("axis index out of range");
  return strides_[var - 1];
}

int ProductGrid::level_at(std::int64_t flat, int var) const {
  return static_cast<int>((flat / stride(var)) % levels(var));
}

double ProductGrid::point_weight(std::int64_t flat) const {
  double w = 1.0;
  for (int var = 1; var <= dimension(); ++var) {
    w *= axes_[var - 1].weights(level_at(flat, var));
  }
  return w;
}

Eigen::VectorXd ProductGrid::marginalize(const Eigen::VectorXd& table,
                                         const IndexSet& keep) const {
  if (table.size() != n_points_) throw std::invalid_argument("table/grid size mismatch");
  if (keep.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");

  Eigen::VectorXd out = table;
  for (int var = 1; var <= dimension(); ++var) {
    if (keep.contains(var)) continue;
    const int m = levels(var);
    const std::int64_t s = stride(var);
    const Eigen::VectorXd& w = axes_[var - 1].weights;
    const std::int64_t block = s * m;
    for (std::int64_t start = 0; start < n_points_; start += block) {
      for (std::int64_t off = 0; off < s; ++off) {
        double avg = 0.0;
        for (int l = 0; l < m; ++l) avg += w(l) * out(start + off + l * s);
        for (int l = 0; l < m; ++l) out(start + off + l * s) = avg;
      }
    }
  }
  return out;
}

double ProductGrid::mean(const Eigen::VectorXd& table) const {
  if (table.size() != n_points_) throw std::invalid_argument("table/grid size mismatch");
  double acc = 0.0;
  for (std::int64_t i = 0; i < n_points_; ++i) acc += point_weight(i) * table(i);
  return acc;
}

AnovaDecomposition::AnovaDecomposition(ProductGrid grid, std::vector<Eigen::VectorXd> effects,
                                       Eigen::VectorXd components)
    : grid_(std::move(grid)), effects_(std::move(effects)), components_(std::move(components)) {
  total_variance_ = components_.sum();
}

double AnovaDecomposition::mean() const { return effects_[0](0); }

const Eigen::VectorXd& AnovaDecomposition::effect(const IndexSet& u) const {
  if (u.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");
  return effects_[u.mask()];
}

double AnovaDecomposition::component(const IndexSet& u) const {
  if (u.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");
  return components_(u.mask());
}

AnovaDecomposition anova_decompose(const Eigen::VectorXd& table, const ProductGrid& grid) {
  const int d = grid.dimension();
  if (d > kAnovaCap) {
    throw CapacityError("anova_decompose: 2^" + std::to_string(d) +
                        " dense effect tables; cap is d <= 12");
  }
  if (table.size() != grid.point_count()) {
    throw std::invalid_argument("anova_decompose: table does not cover the product grid");
  }

  const std::uint32_t n_sets = std::uint32_t{1} << d;
  const std::int64_t n_pts = grid.point_count();

  Eigen::VectorXd point_w(n_pts);
  for (std::int64_t i = 0; i < n_pts; ++i) point_w(i) = grid.point_weight(i);

  std::vector<Eigen::VectorXd> effects(n_sets);
  Eigen::VectorXd components = Eigen::VectorXd::Zero(n_sets);

  // Masks in ascending order already visit every proper subset before its
  // supersets, which is what the recursion needs.
  for (std::uint32_t m = 0; m < n_sets; ++m) {
    const IndexSet u = IndexSet::from_mask(m, d);
    Eigen::VectorXd f_u = grid.marginalize(table, u);
    if (m == 0) {
      effects[0] = std::move(f_u);
      continue;
    }
    for (std::uint32_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
      f_u -= effects[sub];
      if (sub == 0) break;
    }
    components(m) = point_w.dot(f_u.cwiseAbs2());
    effects[m] = std::move(f_u);
  }

  return AnovaDecomposition(grid, std::move(effects), std::move(components));
}

double sobol_lower(const AnovaDecomposition& dec, const IndexSet& u) {
  if (u.dimension() != dec.dimension()) throw std::invalid_argument("dimension mismatch");
  const std::uint32_t m = u.mask();
  if (m == 0) return 0.0;
  double acc = 0.0;
  for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
    acc += dec.component(IndexSet::from_mask(sub, dec.dimension()));
    if (sub == 0) break;
  }
  return acc;
}

double sobol_upper(const AnovaDecomposition& dec, const IndexSet& u) {
  if (u.dimension() != dec.dimension()) throw std::invalid_argument("dimension mismatch");
  const std::uint32_t n_sets = std::uint32_t{1} << dec.dimension();
  double acc = 0.0;
  for (std::uint32_t m = 1; m < n_sets; ++m) {
    if (m & u.mask()) acc += dec.component(IndexSet::from_mask(m, dec.dimension()));
  }
  return acc;
}

ShapleyResult shapley_from_components(const AnovaDecomposition& dec) {
  const int d = dec.dimension();
  const std::uint32_t n_sets = std::uint32_t{1} << d;
  ShapleyResult out;
  out.phi = Eigen::VectorXd::Zero(d);
  for (std::uint32_t m = 1; m < n_sets; ++m) {
    const double share = dec.component(IndexSet::from_mask(m, d)) / std::popcount(m);
    for (int j = 0; j < d; ++j) {
      if (m & (std::uint32_t{1} << j)) out.phi(j) += share;
    }
  }
  out.total = dec.total_variance();
  out.calls = 0;
  return out;
}

ValueFunction explained_variance_game(const AnovaDecomposition& dec) {
  auto shared = std::make_shared<AnovaDecomposition>(dec);
  return ValueFunction(dec.dimension(), [shared](const IndexSet& u) {
    return sobol_lower(*shared, u);
  });
}

}  // namespace shapfx
