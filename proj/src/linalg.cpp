#include "g2calc/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "g2calc/errors.hpp"

namespace g2calc {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RowEchelon ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v[ech.pivot_columns[i]] = -ech.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side size mismatch");
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  RowEchelon ech = rref(std::move(augmented));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    x[ech.pivot_columns[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

std::optional<RationalVector> solve_min_norm(const RationalMatrix& m, const RationalVector& b) {
  RationalMatrix mt = m.transpose();
  auto y = solve(m * mt, b);
  if (!y) return std::nullopt;
  RationalVector x = mt.apply(*y);
  // m mᵀ y = b is solvable whenever m x = b is, and conversely x = mᵀy solves it.
  if (m.apply(x) != b) return std::nullopt;
  return x;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  RowEchelon ech = rref(std::move(augmented));
  if (ech.pivot_columns.size() < n || ech.pivot_columns[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

Rational minor(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DimensionError("minor needs equally many rows and columns");
  RationalMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  }
  return rows.empty() ? Rational(1) : determinant(std::move(sub));
}

}  // namespace g2calc
