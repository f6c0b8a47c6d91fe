#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/msymp.hpp"

namespace g2calc {

/// φ0 = dx123 + dx145 + dx167 + dx246 − dx257 − dx347 − dx356 on R^7.
Form standard_phi();
/// ⋆φ0 = dx4567 + dx2367 + dx2345 + dx1357 − dx1346 − dx1256 − dx1247.
Form standard_star_phi();

/// The flat G2-structure on R^7 together with both multisymplectic views of it.
class G2Context {
 public:
  /// Checks dφ = 0, d⋆φ = 0, ⋆φ = star(φ) and that φ recovers the Euclidean
  /// metric; throws std::logic_error if any of these fail.
  G2Context();

  const Form& phi() const { return phi_; }
  const Form& star_phi() const { return star_phi_; }
  const Metric& metric() const { return metric_; }
  const Form& vol() const { return vol_; }
  /// (R^7, φ) as a multisymplectic manifold of degree 3.
  const MsympStructure& msymp3() const { return msymp3_; }
  /// (R^7, ⋆φ) as a multisymplectic manifold of degree 4.
  const MsympStructure& msymp4() const { return msymp4_; }

 private:
  Form phi_;
  Form star_phi_;
  Metric metric_;
  Form vol_;
  MsympStructure msymp3_;
  MsympStructure msymp4_;
};

G2Context standard_context();

/// Process-wide instance of standard_context(), built on first use.
const G2Context& shared_context();

/// X × Y = ((X∧Y)⌟φ)♯, so g(X × Y, Z) = φ(X, Y, Z).
MultiVector cross(const G2Context& ctx, const MultiVector& x, const MultiVector& y);

/// ⋆(φ ∧ β) for a 2-form β.
Form star_phi_wedge(const G2Context& ctx, const Form& beta);

struct TwoFormSplit {
  Form beta7;
  Form beta14;
};

/// π7(β) = (β + ⋆(φ∧β))/3 and π14(β) = (2β − ⋆(φ∧β))/3.
TwoFormSplit split2(const G2Context& ctx, const Form& beta);
Form pi7(const G2Context& ctx, const Form& beta);
Form pi14(const G2Context& ctx, const Form& beta);

/// Inverse of Q ↦ Q⌟⋆φ on 2-vectors: Q = ½ π7(β)♯ − π14(β)♯.
MultiVector invert_starphi2(const G2Context& ctx, const Form& beta);

/// Outcome of testing an object against φ (Rochesterian) or ⋆φ (coRochesterian).
struct Classification {
  std::string object;
  bool is_form = false;
  int grade = 0;
  /// Multivectors only: whether Q⌟φ (resp. Q⌟⋆φ) is closed, i.e. a G2 (coG2) field.
  std::optional<bool> closed_contraction;
  bool hamiltonian = false;
  /// For a form α: the multivector Q with dα = Q⌟ω. For a multivector Q: the form α with Q⌟ω = dα.
  std::optional<Form> witness_form;
  std::optional<MultiVector> witness_vector;
  /// For Rochesterian 1-forms: π14(dα) = 0, which must agree with the solver.
  std::optional<bool> projection_test;

  std::string witness_text() const;
};

/// Multivectors of grade 1|2 or forms of grade 0|1; GradeError otherwise.
Classification classify_rochesterian(const G2Context& ctx, const MultiVector& q);
Classification classify_rochesterian(const G2Context& ctx, const Form& alpha);

/// Multivectors of grade 1|2|3 or forms of grade 0|1|2; GradeError otherwise.
/// Every 1-form is coRochesterian, with witness invert_starphi2(dα).
Classification classify_corochesterian(const G2Context& ctx, const MultiVector& q);
Classification classify_corochesterian(const G2Context& ctx, const Form& alpha);

struct NormIdentityCheck {
  /// (Q⌟⋆φ) ∧ (Q⌟φ) ∧ ⋆φ
  Form lhs;
  /// 2 |Q⌟φ|² Vol
  Form rhs;
  bool equal = false;
  Polynomial norm_sq;
  /// |(Q⌟φ) ∧ ⋆φ|² = 3 |Q⌟φ|²
  bool intermediate_equal = false;
};

NormIdentityCheck check_norm_identity(const G2Context& ctx, const MultiVector& q);

struct IdentificationFact {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Pointwise linear algebra behind the identifications between Hamiltonian
/// multivector fields and forms for φ and ⋆φ.
std::vector<IdentificationFact> theorem_identification_report(const G2Context& ctx);

}  // namespace g2calc
