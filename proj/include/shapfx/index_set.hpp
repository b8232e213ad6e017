#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace shapfx {

/// A subset of the variable indices {1, ..., d}, d <= 30. Variables are
/// identified by 1-based indices throughout the library; internally the set
/// is a d-bit mask with bit (j-1) standing for variable j.
class IndexSet {
 public:
  static constexpr int kMaxDimension = 30;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> members, int dimension);
  IndexSet(const std::vector<int>& members, int dimension);

  static IndexSet empty(int dimension);
  static IndexSet full(int dimension);
  static IndexSet single(int j, int dimension);
  static IndexSet from_mask(std::uint32_t mask, int dimension);

  int dimension() const noexcept { return d_; }
  std::uint32_t mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool is_empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept;
  bool contains(int j) const;

  IndexSet complement() const;
  IndexSet with(int j) const;                     // u + {j}, j must not be in u
  IndexSet without(int j) const;                  // u - {j}, j must be in u
  IndexSet unite_disjoint(const IndexSet& v) const;

  /// Members in ascending order, 1-based.
  std::vector<int> members() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
    return a.d_ == b.d_ && a.mask_ == b.mask_;
  }

 private:
  IndexSet(std::uint32_t mask, int dimension) : mask_(mask), d_(dimension) {}
  static void check_dimension(int dimension);

  std::uint32_t mask_ = 0;
  int d_ = 0;
};

}  // namespace shapfx
