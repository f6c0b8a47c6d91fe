#include <doctest.h>

#include "g2calc/errors.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/sample.hpp"
#include "g2calc/schouten.hpp"

using namespace g2calc;

namespace {

Polynomial x(int i, int n = 4) { return Polynomial::variable(n, i); }
MultiVector ei(MultiIndex m, int n = 4) { return MultiVector::basis(n, m); }

// [X, Y]^i = Σ_j X^j ∂_j Y^i − Y^j ∂_j X^i, written out by components.
MultiVector coordinate_bracket(const MultiVector& a, const MultiVector& b) {
  const int n = a.dim();
  MultiVector out(n, 1);
  for (int i = 1; i <= n; ++i) {
    Polynomial c(n);
    for (int j = 1; j <= n; ++j) {
      c += a.coefficient(MultiIndex{j}) * partial(b.coefficient(MultiIndex{i}), j);
      c -= b.coefficient(MultiIndex{j}) * partial(a.coefficient(MultiIndex{i}), j);
    }
    out += c * e(n, i);
  }
  return out;
}

int sign(int p) { return p % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("vector field brackets") {
  CHECK(lie_bracket(e(4, 1), e(4, 2)).is_zero());
  CHECK(lie_bracket(x(1) * e(4, 2), e(4, 1)) == -e(4, 2));
  CHECK(schouten(x(1) * e(4, 2), e(4, 1)) == -e(4, 2));
  Sampler s(2);
  for (int t = 0; t < 100; ++t) {
    const auto a = s.multivector(4, 1, 2, 3), b = s.multivector(4, 1, 2, 3);
    const auto f = s.polynomial(4);
    CHECK(same_element(lie_bracket(a, b), coordinate_bracket(a, b)));
    CHECK(same_element(schouten(a, b), coordinate_bracket(a, b)));
    CHECK(same_element(lie_bracket(a, f * b), f * lie_bracket(a, b) + apply(a, f) * b));
  }
}

TEST_CASE("Schouten bracket examples") {
  for (int i = 1; i <= 4; ++i) CHECK(schouten(e(4, i), ei({2, 3})).is_zero());
  const auto p = x(1) * ei({2, 3});
  const auto lhs = schouten(p, e(4, 1)), rhs = schouten(e(4, 1), p);
  CHECK(lhs == rhs * Rational(sign(2 * 1)));
  CHECK(rhs == ei({2, 3}));
  const auto f = MultiVector::scalar(x(1) * x(2));
  CHECK(schouten(e(4, 1), f) == MultiVector::scalar(x(2)));
  CHECK(schouten(f, f).is_zero());
}

TEST_CASE("Lie derivative of a multivector is the bracket with a vector") {
  Sampler s(17);
  for (int t = 0; t < 80; ++t) {
    const auto X = s.multivector(5, 1);
    const auto q = s.multivector(5, s.integer(1, 3));
    CHECK(same_element(lie_derivative(X, q), schouten(X, q)));
  }
  CHECK_THROWS_AS(lie_derivative(ei({1, 2}), ei({3, 4})), GradeError);
}

TEST_CASE("Schouten graded identities") {
  Sampler s(23);
  for (int t = 0; t < 60; ++t) {
    const int q1 = s.integer(0, 2), q2 = s.integer(0, 2), q3 = s.integer(0, 2);
    const auto a = s.multivector(5, q1), b = s.multivector(5, q2), c = s.multivector(5, q3);
    CHECK(same_element(schouten(a, b), sign(q1 * q2) * schouten(b, a)));
    CHECK(same_element(schouten(a, wedge(b, c)),
                       wedge(schouten(a, b), c) + sign(q1 * q2 + q2) * wedge(b, schouten(a, c))));
    const auto jac = sign(q1 * (q3 - 1)) * schouten(a, schouten(b, c)) +
                     sign(q2 * (q1 - 1)) * schouten(b, schouten(c, a)) +
                     sign(q3 * (q2 - 1)) * schouten(c, schouten(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Lie derivative of forms") {
  const auto x1dx2 = x(1) * dx(4, 2);
  CHECK(lie_derivative(e(4, 1), x1dx2) == dx(4, 2));
  const auto closed = Form::basis(4, MultiIndex{3, 4});
  CHECK(lie_derivative(ei({1, 2}), closed).is_zero());
  const auto phi = standard_phi();
  const auto q = MultiVector::basis(7, MultiIndex{6, 7});
  CHECK(lie_derivative(q, phi).is_zero());
  CHECK(same_element(lie_derivative(q, phi), -d(contract(q, phi))));
}

TEST_CASE("Cartan formula for vector fields") {
  Sampler s(31);
  for (int t = 0; t < 60; ++t) {
    const auto X = s.multivector(5, 1);
    const auto a = s.form(5, s.integer(0, 4));
    CHECK(same_element(lie_derivative(X, a), contract(X, d(a)) + d(contract(X, a))));
    const auto b = s.form(5, s.integer(0, 2));
    CHECK(same_element(lie_derivative(X, wedge(a, b)),
                       wedge(lie_derivative(X, a), b) + wedge(a, lie_derivative(X, b))));
  }
}

TEST_CASE("bracket errors") {
  CHECK_THROWS_AS(schouten(e(3, 1), e(4, 1)), DimensionError);
  CHECK_THROWS_AS(lie_bracket(ei({1, 2}), e(4, 1)), GradeError);
}
