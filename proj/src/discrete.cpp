#include "shapfx/discrete.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace shapfx {

DiscreteJoint::DiscreteJoint(std::vector<DiscreteAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("DiscreteJoint needs at least one atom");
  d_ = static_cast<int>(atoms_[0].x.size());
  if (d_ < 1 || d_ > IndexSet::kMaxDimension) {
    throw std::domain_error("DiscreteJoint dimension must be in [1, 30]");
  }

  double total = 0.0;
  std::map<std::vector<double>, int> seen;
  for (const DiscreteAtom& a : atoms_) {
    if (a.x.size() != d_) throw std::invalid_argument("atom dimension mismatch");
    if (!(a.p > 0.0)) throw std::domain_error("atom probabilities must be strictly positive");
    total += a.p;
    std::vector<double> key(a.x.data(), a.x.data() + d_);
    if (!seen.emplace(std::move(key), 1).second) {
      throw std::invalid_argument("atoms must be distinct in x");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::domain_error("atom probabilities must sum to 1 within 1e-12");
  }
}

double DiscreteJoint::output_mean() const {
  double m = 0.0;
  for (const DiscreteAtom& a : atoms_) m += a.p * a.y;
  return m;
}

double DiscreteJoint::output_variance() const {
  const double m = output_mean();
  double v = 0.0;
  for (const DiscreteAtom& a : atoms_) v += a.p * (a.y - m) * (a.y - m);
  return v;
}

ValueFunction discrete_value_function(const DiscreteJoint& joint) {
  auto shared = std::make_shared<DiscreteJoint>(joint);
  return ValueFunction(joint.dimension(), [shared](const IndexSet& u) {
    const std::vector<int> idx = u.members();
    // group mass and mass-weighted output on the u-coordinates
    std::map<std::vector<double>, std::pair<double, double>> groups;
    for (const DiscreteAtom& a : shared->atoms()) {
      std::vector<double> key;
      key.reserve(idx.size());
      for (int j : idx) key.push_back(a.x(j - 1));
      auto& g = groups[std::move(key)];
      g.first += a.p;
      g.second += a.p * a.y;
    }
    const double mean = shared->output_mean();
    double v = 0.0;
    for (const auto& [key, g] : groups) {
      const double cond_mean = g.second / g.first;
      v += g.first * (cond_mean - mean) * (cond_mean - mean);
    }
    return v;
  });
}

DiscreteJoint bijection_transform(const DiscreteJoint& joint, int j,
                                  const std::function<double(double)>& relabel) {
  if (j < 1 || j > joint.dimension()) throw std::domain_error("coordinate index out of range");
  if (!relabel) throw std::invalid_argument("relabel map required");

  std::map<double, double> image;
  std::map<double, int> hit;
  std::vector<DiscreteAtom> out = joint.atoms();
  for (DiscreteAtom& a : out) {
    const double src = a.x(j - 1);
    const double dst = relabel(src);
    auto [it, inserted] = image.emplace(src, dst);
    if (!inserted && it->second != dst) {
      throw std::invalid_argument("relabel map is not a function of the coordinate");
    }
    if (inserted && ++hit[dst] > 1) {
      throw std::invalid_argument("relabel map is not injective on observed values");
    }
    a.x(j - 1) = dst;
  }
  return DiscreteJoint(std::move(out));
}

}  // namespace shapfx
