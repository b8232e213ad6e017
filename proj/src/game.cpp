#include "shapfx/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shapfx/errors.hpp"
#include "shapfx/numeric.hpp"

namespace shapfx {

namespace {

constexpr int kExactCap = 25;        // 2^d coalition evaluations
constexpr int kPermutationCap = 9;   // d! orders

// Evaluate every coalition once, ascending bitmask order.
std::vector<double> tabulate(const ValueFunction& val, std::int64_t* calls) {
  const int d = val.dimension();
  const std::uint32_t n = std::uint32_t{1} << d;
  std::vector<double> table(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    table[m] = val(IndexSet::from_mask(m, d));
  }
  if (calls) *calls = static_cast<std::int64_t>(n);
  return table;
}

}  // namespace

ValueFunction::ValueFunction(int dimension, std::function<double(const IndexSet&)> eval)
    : d_(dimension), eval_(std::move(eval)) {
  if (dimension < 1 || dimension > IndexSet::kMaxDimension) {
    throw std::domain_error("ValueFunction dimension must be in [1, 30]");
  }
  if (!eval_) throw std::invalid_argument("ValueFunction requires an evaluator");
}

double ValueFunction::operator()(const IndexSet& u) const {
  if (u.dimension() != d_) throw std::invalid_argument("coalition dimension mismatch");
  if (u.is_empty()) return 0.0;
  return eval_(u);
}

double shapley_weight(int d, int k) {
  if (d < 1 || d > IndexSet::kMaxDimension) {
    throw std::domain_error("shapley_weight: d must be in [1, 30]");
  }
  if (k < 0 || k >= d) {
    throw std::domain_error("shapley_weight: need 0 <= k <= d-1");
  }
  return static_cast<double>(1.0L / (static_cast<long double>(d) * binomial(d - 1, k)));
}

Eigen::VectorXd shapley_from_value_table(const std::vector<double>& table, int d) {
  const std::uint32_t n = std::uint32_t{1} << d;
  if (table.size() != n) throw std::invalid_argument("value table size must be 2^d");

  std::vector<double> weight(d);
  for (int k = 0; k < d; ++k) weight[k] = shapley_weight(d, k);

  std::vector<KahanSum<double>> acc(d);
  for (std::uint32_t m = 0; m + 1 < n; ++m) {  // the full coalition admits no joiner
    const double w = weight[std::popcount(m)];
    for (int j = 0; j < d; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (m & bit) continue;
      acc[j].add(w * (table[m | bit] - table[m]));
    }
  }

  Eigen::VectorXd phi(d);
  for (int j = 0; j < d; ++j) phi(j) = acc[j].value();
  return phi;
}

ShapleyResult shapley_exact(const ValueFunction& val) {
  const int d = val.dimension();
  if (d > kExactCap) {
    throw CapacityError("shapley_exact: d=" + std::to_string(d) + " needs 2^" +
                        std::to_string(d) + " coalition evaluations; cap is d <= 25");
  }
  ShapleyResult out;
  const std::vector<double> table = tabulate(val, &out.calls);
  out.phi = shapley_from_value_table(table, d);
  out.total = table.back();
  return out;
}

ShapleyResult shapley_permutation(const ValueFunction& val) {
  const int d = val.dimension();
  if (d > kPermutationCap) {
    throw CapacityError("shapley_permutation: d=" + std::to_string(d) +
                        " needs d! order enumerations; cap is d <= 9");
  }

  // Memoize coalition values as orders are walked.
  const std::uint32_t n = std::uint32_t{1} << d;
  std::vector<double> table(n);
  std::vector<char> known(n, 0);
  table[0] = 0.0;
  known[0] = 1;
  std::int64_t calls = 0;
  auto value_of = [&](std::uint32_t m) {
    if (!known[m]) {
      table[m] = val(IndexSet::from_mask(m, d));
      known[m] = 1;
      ++calls;
    }
    return table[m];
  };

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 1);
  std::vector<KahanSum<double>> acc(d);
  long double n_orders = 0;
  do {
    std::uint32_t m = 0;
    double prev = 0.0;
    for (int j : order) {
      m |= std::uint32_t{1} << (j - 1);
      const double cur = value_of(m);
      acc[j - 1].add(cur - prev);
      prev = cur;
    }
    ++n_orders;
  } while (std::next_permutation(order.begin(), order.end()));

  ShapleyResult out;
  out.phi.resize(d);
  for (int j = 0; j < d; ++j) out.phi(j) = static_cast<double>(acc[j].value() / n_orders);
  out.total = value_of(n - 1);
  out.calls = calls + 1;  // the empty coalition
  return out;
}

AxiomReport check_axioms(const ValueFunction& val, const ShapleyResult& result,
                         double efficiency_tol, double phi_tol, double detect_tol) {
  const int d = val.dimension();
  if (d > kExactCap) throw CapacityError("check_axioms: coalition scan capped at d <= 25");
  if (result.phi.size() != d) throw std::invalid_argument("phi size mismatch");

  const std::vector<double> table = tabulate(val, nullptr);
  const std::uint32_t n = std::uint32_t{1} << d;
  const double scale = std::max(1.0, std::abs(result.total));

  AxiomReport report;
  report.efficiency_gap = std::abs(result.phi.sum() - result.total);
  report.efficiency_pass = report.efficiency_gap <= efficiency_tol * scale;

  auto close = [&](double a, double b) { return std::abs(a - b) <= detect_tol; };

  for (int j = 1; j <= d; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << (j - 1);
    bool dummy = true;
    for (std::uint32_t m = 0; m < n && dummy; ++m) {
      if (m & bit) continue;
      if (!close(table[m | bit], table[m])) dummy = false;
    }
    if (dummy) {
      report.dummy_players.push_back(j);
      if (std::abs(result.phi(j - 1)) > phi_tol * scale) report.dummy_pass = false;
    }
  }

  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      const std::uint32_t bi = std::uint32_t{1} << (i - 1);
      const std::uint32_t bj = std::uint32_t{1} << (j - 1);
      bool interchangeable = true;
      for (std::uint32_t m = 0; m < n && interchangeable; ++m) {
        if (m & (bi | bj)) continue;
        if (!close(table[m | bi], table[m | bj])) interchangeable = false;
      }
      if (interchangeable) {
        report.symmetric_pairs.emplace_back(i, j);
        if (std::abs(result.phi(i - 1) - result.phi(j - 1)) > phi_tol * scale) {
          report.symmetry_pass = false;
        }
      }
    }
  }
  return report;
}

}  // namespace shapfx
