#include "shapfx/index_set.hpp"

#include <stdexcept>
#include <string>

namespace shapfx {

void IndexSet::check_dimension(int dimension) {
  if (dimension < 0 || dimension > kMaxDimension) {
    throw std::domain_error("IndexSet dimension must be in [0, 30], got " +
                            std::to_string(dimension));
  }
}

IndexSet::IndexSet(std::initializer_list<int> members, int dimension)
    : IndexSet(std::vector<int>(members), dimension) {}

IndexSet::IndexSet(const std::vector<int>& members, int dimension) : d_(dimension) {
  check_dimension(dimension);
  for (int j : members) {
    if (j < 1 || j > dimension) {
      throw std::domain_error("variable index " + std::to_string(j) +
                              " outside [1, " + std::to_string(dimension) + "]");
    }
    const std::uint32_t bit = 1u << (j - 1);
    if (mask_ & bit) {
      throw std::invalid_argument("duplicate variable index " + std::to_string(j));
    }
    mask_ |= bit;
  }
}

IndexSet IndexSet::empty(int dimension) {
  check_dimension(dimension);
  return IndexSet(0u, dimension);
}

IndexSet IndexSet::full(int dimension) {
  check_dimension(dimension);
  const std::uint32_t mask = dimension == 0 ? 0u : (std::uint32_t{1} << dimension) - 1u;
  return IndexSet(mask, dimension);
}

IndexSet IndexSet::single(int j, int dimension) { return IndexSet({j}, dimension); }

IndexSet IndexSet::from_mask(std::uint32_t mask, int dimension) {
  check_dimension(dimension);
  if (mask >= (std::uint32_t{1} << dimension)) {
    throw std::domain_error("mask has bits beyond dimension " + std::to_string(dimension));
  }
  return IndexSet(mask, dimension);
}

bool IndexSet::is_full() const { return *this == full(d_); }

bool IndexSet::contains(int j) const {
  if (j < 1 || j > d_) return false;
  return (mask_ >> (j - 1)) & 1u;
}

IndexSet IndexSet::complement() const {
  return IndexSet(full(d_).mask_ & ~mask_, d_);
}

IndexSet IndexSet::with(int j) const {
  if (j < 1 || j > d_) {
    throw std::domain_error("variable index " + std::to_string(j) + " outside [1, " +
                            std::to_string(d_) + "]");
  }
  if (contains(j)) throw std::invalid_argument("index already present");
  return IndexSet(mask_ | (1u << (j - 1)), d_);
}

IndexSet IndexSet::without(int j) const {
  if (!contains(j)) throw std::invalid_argument("index not present");
  return IndexSet(mask_ & ~(1u << (j - 1)), d_);
}

IndexSet IndexSet::unite_disjoint(const IndexSet& v) const {
  if (v.d_ != d_) throw std::invalid_argument("dimension mismatch");
  if (mask_ & v.mask_) throw std::invalid_argument("sets are not disjoint");
  return IndexSet(mask_ | v.mask_, d_);
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int j = 1; j <= d_; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

}  // namespace shapfx
