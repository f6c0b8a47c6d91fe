#pragma once

#include "g2calc/exterior.hpp"

namespace g2calc {

/// [X, Y]^i = X(Y^i) − Y(X^i) for vector fields.
MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);

/// Lie derivative L_X Q of a multivector field along a vector field, acting as
/// a derivation: L_X f = X(f), L_X(Y1∧…∧Yq) = Σ Y1∧…∧[X,Yi]∧…∧Yq.
MultiVector lie_derivative(const MultiVector& x, const MultiVector& q);

/// Schouten–Nijenhuis bracket of grade q1 + q2 − 1, built from
///   [X1∧…∧Xl, Q] = Σ_i (−1)^{i+1} X1∧…∧X̂i∧…∧Xl ∧ L_{Xi}Q
/// applied to each term f ∂_I of Q1 written as (f∂_{i1}) ∧ ∂_{i2} ∧ … .
/// A function first argument uses [f, Q] = [Q, f] (graded antisymmetry at q1 = 0),
/// and [f, g] = 0. The result is the zero object when the grade leaves 0..n.
MultiVector schouten(const MultiVector& q1, const MultiVector& q2);

/// Extended Lie derivative of a form along a multivector field:
///   L_Q α = Q⌟dα − (−1)^q d(Q⌟α).
Form lie_derivative(const MultiVector& q, const Form& alpha);

}  // namespace g2calc
