#include "g2calc/multi_index.hpp"

#include "g2calc/errors.hpp"
#include "g2calc/polynomial.hpp"

namespace g2calc {

MultiIndex::MultiIndex(std::initializer_list<int> axes) : MultiIndex(std::vector<int>(axes)) {}

MultiIndex::MultiIndex(const std::vector<int>& axes) {
  int previous = 0;
  for (int a : axes) {
    if (a < 1 || a > kMaxDim) throw GradeError("axis label " + std::to_string(a) + " out of range");
    if (a <= previous) throw GradeError("multi-index labels must be strictly increasing");
    bits_ |= 1u << (a - 1);
    previous = a;
  }
}

MultiIndex MultiIndex::full(int n) {
  return from_bits(n >= 32 ? ~0u : ((1u << n) - 1u));
}

std::vector<int> MultiIndex::axes() const {
  std::vector<int> out;
  out.reserve(grade());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int merge_sign(MultiIndex a, MultiIndex b) {
  if (!a.disjoint(b)) return 0;
  // Each axis y of b must be carried past every axis of a larger than y.
  int transpositions = 0;
  for (std::uint32_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    int y = std::countr_zero(rest) + 1;
    transpositions += std::popcount(a.bits() >> y);
  }
  return (transpositions & 1) ? -1 : 1;
}

std::vector<MultiIndex> all_multi_indices(int n, int grade) {
  std::vector<MultiIndex> out;
  if (grade < 0 || grade > n) return out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == grade) {
      out.emplace_back(current);
      return;
    }
    for (int a = start; a <= n; ++a) {
      current.push_back(a);
      self(self, a + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

std::string index_label(MultiIndex m) {
  std::string out;
  bool compact = m.max_axis() <= 9;
  for (int a : m.axes()) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

}  // namespace g2calc
