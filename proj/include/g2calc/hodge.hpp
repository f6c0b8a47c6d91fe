#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/linalg.hpp"

namespace g2calc {

/// Constant symmetric nondegenerate metric on R^n, extended to j-vectors and
/// j-forms through Gram determinants.
class Metric {
 public:
  /// Throws DimensionError for a non-square or non-symmetric matrix and
  /// DegenerateFormError for a singular one.
  explicit Metric(RationalMatrix g);

  static Metric euclidean(int n);
  static Metric diagonal(const std::vector<Rational>& entries);

  int dim() const { return static_cast<int>(g_.rows()); }
  const RationalMatrix& matrix() const { return g_; }
  const RationalMatrix& inverse_matrix() const { return g_inv_; }
  const Rational& determinant() const { return det_; }
  bool is_euclidean() const { return euclidean_; }
  bool is_positive_definite() const { return positive_definite_; }

  /// √det g when it is rational, otherwise nullopt.
  const std::optional<Rational>& volume_factor() const { return volume_factor_; }
  /// Vol = √det g · dx^{1…n}; UnsupportedError if √det g is irrational.
  Form volume() const;

  /// g(∂_I, ∂_J) = det g[I,J].
  Rational vector_gram(MultiIndex i, MultiIndex j) const;
  /// g(dx_I, dx_J) = det g⁻¹[I,J].
  Rational covector_gram(MultiIndex i, MultiIndex j) const;

 private:
  RationalMatrix g_;
  RationalMatrix g_inv_;
  Rational det_;
  bool euclidean_ = false;
  bool positive_definite_ = false;
  std::optional<Rational> volume_factor_;
};

/// Index lowering Q ↦ Q♭ on each grade.
Form flat(const Metric& g, const MultiVector& q);

/// Index raising α ↦ α♯, the inverse of flat.
MultiVector sharp(const Metric& g, const Form& alpha);

/// Hodge star defined by β ∧ ⋆α = g(β, α) Vol for all β.
/// Needs a positive-definite metric with rational √det g (UnsupportedError otherwise).
/// Out-of-range grades map zero to zero.
Form star(const Metric& g, const Form& alpha);

/// Induced inner product g(α, β) of two same-grade forms.
Polynomial inner(const Metric& g, const Form& alpha, const Form& beta);

/// Both sides of the four contraction/star identities for Q of grade q and α of grade l:
///   1. ⋆(Q⌟α)   = (−1)^{q(l−q)} Q♭ ∧ ⋆α
///   2. ⋆(Q⌟⋆α)  = (−1)^{q(n−l−q)+l(n−l)} Q♭ ∧ α
///   3. Q⌟α      = (−1)^{(l−q)(n−l)} ⋆(Q♭ ∧ ⋆α)
///   4. Q⌟⋆α     = (−1)^{lq} ⋆(Q♭ ∧ α)
struct ContractionIdentityReport {
  std::array<Form, 4> lhs;
  std::array<Form, 4> rhs;
  std::array<bool, 4> holds{};

  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

ContractionIdentityReport check_contraction_identities(const Metric& g, const MultiVector& q, const Form& alpha);

/// Metric determined by a 3-form on R^7 through (X⌟φ)∧(Y⌟φ)∧φ = 6 g(X,Y) Vol.
struct MetricReport {
  std::vector<std::vector<double>> g;
  /// max over i ≤ j of |B_ij − 6 g_ij √det g| after recomputing √det g from g.
  double residual = 0.0;
};

/// Builds B_ij from (∂_i⌟φ)∧(∂_j⌟φ)∧φ = B_ij dx^{1…7}. Since B = 6 g √det g,
/// det B = 6⁷ (det g)^{9/2}, so g = B / (6 (det B / 6⁷)^{1/9}). This normalization is
/// derived from the defining identity rather than quoted from a reference.
/// Throws DegenerateFormError when det B ≤ 0 (non-generic or wrongly oriented φ),
/// UnsupportedError for non-constant coefficients, GradeError/DimensionError for
/// anything other than a 3-form on R^7.
MetricReport recover_metric(const Form& phi);

/// The exact matrix B_ij used by recover_metric.
RationalMatrix metric_numerator(const Form& phi);

}  // namespace g2calc
