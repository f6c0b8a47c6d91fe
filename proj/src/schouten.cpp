#include "g2calc/schouten.hpp"

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

void check_dims(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("multivector fields on spaces of different dimension");
}

MultiIndex single(int axis) { return MultiIndex::from_bits(1u << (axis - 1)); }

}  // namespace

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y) {
  if (x.grade() != 1 || y.grade() != 1) throw GradeError("Lie bracket needs two vector fields");
  check_dims(x, y);
  MultiVector out(x.dim(), 1);
  for (int i = 1; i <= x.dim(); ++i) {
    Polynomial c = apply(x, y.coefficient(single(i))) - apply(y, x.coefficient(single(i)));
    out.add_term(single(i), c);
  }
  return out;
}

MultiVector lie_derivative(const MultiVector& x, const MultiVector& q) {
  if (x.grade() != 1) throw GradeError("Lie derivative of a multivector needs a vector field");
  check_dims(x, q);
  const int n = q.dim();
  MultiVector out(n, q.grade());
  if (!q.in_range()) return out;
  for (const auto& [index, g] : q.terms()) {
    out.add_term(index, apply(x, g));
    // [X, ∂_j] = −Σ_i ∂_j(X^i) ∂_i replaces ∂_j in place.
    for (int j : index.axes()) {
      MultiIndex below = MultiIndex::from_bits(index.bits() & ((1u << (j - 1)) - 1u));
      MultiIndex above = index.minus(below).without(j);
      for (const auto& [xi, xcoeff] : x.terms()) {
        int i = xi.max_axis();
        Polynomial dx = partial(xcoeff, j);
        if (dx.is_zero()) continue;
        if (i != j && index.contains(i)) continue;
        int sign = merge_sign(below, single(i)) * merge_sign(below.with(i), above);
        Polynomial c = -(g * dx);
        if (sign < 0) c *= Rational(-1);
        out.add_term(below.with(i) | above, c);
      }
    }
  }
  return out;
}

MultiVector schouten(const MultiVector& q1, const MultiVector& q2) {
  check_dims(q1, q2);
  const int n = q1.dim();
  MultiVector out(n, q1.grade() + q2.grade() - 1);
  if (!out.in_range()) return out;
  if (q1.grade() == 0) return schouten(q2, q1);

  for (const auto& [index, f] : q1.terms()) {
    const std::vector<int> axes = index.axes();
    const int l = static_cast<int>(axes.size());
    for (int pos = 0; pos < l; ++pos) {
      // X_1 = f ∂_{i1}, X_k = ∂_{ik} for k > 1.
      MultiVector xi = pos == 0 ? MultiVector::term(single(axes[0]), f) : e(n, axes[pos]);
      MultiVector rest = pos == 0 ? MultiVector::basis(n, index.without(axes[0]))
                                  : MultiVector::term(index.without(axes[pos]), f);
      MultiVector piece = wedge(rest, lie_derivative(xi, q2));
      if (pos % 2 == 1) piece *= Rational(-1);
      out += piece;
    }
  }
  return out;
}

Form lie_derivative(const MultiVector& q, const Form& alpha) {
  if (q.dim() != alpha.dim()) throw DimensionError("multivector and form on spaces of different dimension");
  Form first = contract(q, d(alpha));
  Form second = d(contract(q, alpha));
  if (q.grade() % 2 == 0) second *= Rational(-1);
  Form out = first;
  out += second;
  return out;
}

}  // namespace g2calc
