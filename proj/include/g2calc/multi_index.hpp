#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace g2calc {

/// Strictly increasing set of axis labels in 1..n, stored as a bitmask
/// (bit i-1 set when axis i is present). The grade is the popcount.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  /// Builds from axis labels; throws GradeError on repeats, non-increasing
  /// input, or labels outside 1..kMaxDim.
  MultiIndex(std::initializer_list<int> axes);
  explicit MultiIndex(const std::vector<int>& axes);

  static constexpr MultiIndex from_bits(std::uint32_t bits) {
    MultiIndex m;
    m.bits_ = bits;
    return m;
  }
  /// {1, ..., n}.
  static MultiIndex full(int n);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int grade() const { return std::popcount(bits_); }
  constexpr bool contains(int axis) const { return (bits_ >> (axis - 1)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  /// Largest axis label, 0 for the empty index.
  constexpr int max_axis() const { return 32 - std::countl_zero(bits_); }

  std::vector<int> axes() const;

  constexpr bool disjoint(MultiIndex other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool subset_of(MultiIndex other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr MultiIndex operator|(MultiIndex other) const { return from_bits(bits_ | other.bits_); }
  constexpr MultiIndex minus(MultiIndex other) const { return from_bits(bits_ & ~other.bits_); }
  MultiIndex with(int axis) const { return from_bits(bits_ | (1u << (axis - 1))); }
  MultiIndex without(int axis) const { return from_bits(bits_ & ~(1u << (axis - 1))); }

  /// Lower grade first; within a grade, lexicographic on the sorted axis list.
  friend constexpr bool operator<(MultiIndex a, MultiIndex b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    // At the first differing position the index holding the smaller axis sorts first.
    return (a.bits_ & diff & (~diff + 1u)) != 0;
  }
  friend constexpr bool operator==(MultiIndex a, MultiIndex b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Sign (+1/-1) of the permutation sorting the concatenation (a..., b...),
/// or 0 if the two indices share an axis. This is dx_a ∧ dx_b = sign · dx_{a∪b}.
int merge_sign(MultiIndex a, MultiIndex b);

/// Every grade-k subset of {1..n}, in MultiIndex order.
std::vector<MultiIndex> all_multi_indices(int n, int grade);

/// Axis labels written back to back ("145") when every label is a single digit,
/// otherwise comma separated ("1,12").
std::string index_label(MultiIndex m);

}  // namespace g2calc
