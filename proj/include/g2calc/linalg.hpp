#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2calc/rational.hpp"

namespace g2calc {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalVector column(std::size_t c) const;
  RationalVector apply(const RationalVector& x) const;
  bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan reduced row echelon form.
RowEchelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (free entry set to 1).
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// The unique solution lying in the row space of m (minimum Euclidean norm),
/// found as x = mᵀy with (m mᵀ) y = b; nullopt when inconsistent.
std::optional<RationalVector> solve_min_norm(const RationalMatrix& m, const RationalVector& b);

Rational determinant(RationalMatrix m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Determinant of the submatrix on the given rows and columns.
Rational minor(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace g2calc
