#pragma once

#include <map>
#include <span>
#include <string>

#include "g2calc/multi_index.hpp"
#include "g2calc/polynomial.hpp"

namespace g2calc {

struct FormKind {
  static constexpr const char* name = "form";
};
struct VectorKind {
  static constexpr const char* name = "multivector";
};

/// Sparse grade-l element of the exterior algebra on R^n with polynomial
/// coefficients: a map from grade-l multi-indices to nonzero polynomials.
///
/// Forms (dx_I) and multivector fields (∂_I) share this layout but are distinct
/// types; contraction is the only operation that mixes them. Grades outside
/// 0..n are representable but only as the zero object, so identities that run
/// past the top degree compare zero with zero.
template <class Kind>
class Graded {
 public:
  using TermMap = std::map<MultiIndex, Polynomial>;

  Graded(int dim, int grade);

  /// c · (basis element I).
  static Graded basis(int dim, MultiIndex index, const Rational& c = Rational(1));
  /// f · (basis element I).
  static Graded term(MultiIndex index, const Polynomial& f);
  /// Grade-0 object holding a function.
  static Graded scalar(const Polynomial& f);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool is_zero() const { return terms_.empty(); }
  bool in_range() const { return grade_ >= 0 && grade_ <= dim_; }
  /// Every coefficient is a constant polynomial.
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  Polynomial coefficient(MultiIndex index) const;
  /// Grade-0 value as a polynomial; throws GradeError for other grades.
  Polynomial as_scalar() const;

  void add_term(MultiIndex index, const Polynomial& f);

  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  Graded& operator*=(const Rational& c);
  Graded& operator*=(const Polynomial& f);

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(Graded a) { return a *= Rational(-1); }
  friend Graded operator*(Graded a, const Rational& c) { return a *= c; }
  friend Graded operator*(const Rational& c, Graded a) { return a *= c; }
  friend Graded operator*(const Polynomial& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const Polynomial& f) { return a *= f; }

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  int grade_;
  TermMap terms_;
};

using Form = Graded<FormKind>;
using MultiVector = Graded<VectorKind>;

extern template class Graded<FormKind>;
extern template class Graded<VectorKind>;

/// Equal as elements of the exterior algebra: identical, or both zero
/// regardless of the (possibly out-of-range) grade label.
template <class Kind>
bool same_element(const Graded<Kind>& a, const Graded<Kind>& b) {
  return (a.is_zero() && b.is_zero() && a.dim() == b.dim()) || a == b;
}

/// Exterior product; dx_I ∧ dx_J is zero on overlap, otherwise the merged
/// index times the permutation sign.
template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b);

/// Q⌟α following (X1∧…∧Xq)⌟α = Xq⌟…⌟X1⌟α, i.e. α(X1, …, Xq, ·).
/// On basis elements ∂_I⌟dx_J = sign · dx_{J∖I} with dx_J = sign · dx_I ∧ dx_{J∖I}.
/// Zero of grade l−q when q > l; a grade-0 Q multiplies.
Form contract(const MultiVector& q, const Form& alpha);

/// Exterior derivative d(f dx_J) = Σ_i ∂_i f dx^i ∧ dx_J.
Form d(const Form& alpha);

/// Every coefficient evaluated at the point (length dim).
template <class Kind>
Graded<Kind> eval_at(const Graded<Kind>& a, std::span<const Rational> point);

/// Directional derivative X(f) of a function along a vector field.
Polynomial apply(const MultiVector& x, const Polynomial& f);

/// Primitive of a form from the radial homotopy operator: for closed α of
/// grade ≥ 1, d(antiderivative(α)) = α (polynomial Poincaré lemma on R^n).
/// On a monomial term f·dx_J of polynomial degree m and grade p it returns
/// (E⌟ f dx_J)/(m+p) with E = Σ x^i ∂_i.
Form antiderivative(const Form& alpha);

/// Coordinate 1-form dx^axis and coordinate vector field ∂_axis.
Form dx(int dim, int axis);
MultiVector e(int dim, int axis);

/// Canonical text: forms as "x2*dx3 + x4*dx5", multivectors as "e6^e7";
/// terms ordered by multi-index, the zero element as "0".
std::string to_string(const Form& a);
std::string to_string(const MultiVector& a);

}  // namespace g2calc
