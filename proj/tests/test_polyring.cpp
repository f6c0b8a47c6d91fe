#include <doctest.h>

#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/linalg.hpp"
#include "g2calc/polynomial.hpp"
#include "g2calc/sample.hpp"

using namespace g2calc;

namespace {

Polynomial x(int i, int n = 3) { return Polynomial::variable(n, i); }
Polynomial c(const Rational& v, int n = 3) { return Polynomial::constant(n, v); }

std::vector<Rational> random_point(Sampler& s, int n) {
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) p.push_back(s.rational());
  return p;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((x(1) + c(1)) + (-x(1)) == c(1));
  CHECK(Polynomial(3) + x(2) == x(2));
  CHECK(2 * x(1) * x(2) + 3 * x(1) * x(2) == 5 * x(1) * x(2));
  CHECK_THROWS_AS(add(x(1, 2), x(1, 3)), DimensionError);
}

TEST_CASE("multiplication") {
  CHECK((x(1) + c(1)) * (x(1) - c(1)) == x(1).pow(2) - c(1));
  CHECK((x(1) * Polynomial(3)).is_zero());
  CHECK(to_string(x(2) * x(3)) == "x2*x3");
  CHECK_THROWS_AS(mul(x(1, 2), x(1, 4)), DimensionError);
}

TEST_CASE("partial derivatives") {
  CHECK(partial(x(1) * x(2), 1) == x(2));
  CHECK(partial(x(1) * x(2), 3).is_zero());
  CHECK(partial(x(1).pow(2), 1) == 2 * x(1));
  CHECK_THROWS_AS(partial(x(1), 4), GradeError);
}

TEST_CASE("evaluation") {
  const std::vector<Rational> p{1, 2, 0};
  CHECK(eval(x(1) + x(2), p) == 3);
  CHECK(eval(c(Rational(7, 3)), p) == Rational(7, 3));
  CHECK(eval(x(1) * x(2), std::vector<Rational>{2, 3, 0}) == 6);
  CHECK_THROWS_AS(eval(x(1), std::vector<Rational>{1}), DimensionError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("4") == 4);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("ring laws hold pointwise under evaluation") {
  Sampler s(11);
  for (int t = 0; t < 100; ++t) {
    const auto p = s.polynomial(4, 3, 3), q = s.polynomial(4, 3, 3), r = s.polynomial(4, 2, 2);
    const auto pt = random_point(s, 4);
    CHECK(eval(p * q, pt) == eval(p, pt) * eval(q, pt));
    CHECK(eval(p + q, pt) == eval(p, pt) + eval(q, pt));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    const int i = s.integer(1, 4);
    CHECK(partial(p * q, i) == partial(p, i) * q + p * partial(q, i));
    CHECK(partial(partial(p, 1), 2) == partial(partial(p, 2), 1));
  }
}

TEST_CASE("terms are ordered by degree then lexicographically") {
  const auto p = x(3) + x(1) * x(1) + c(2) + x(1);
  CHECK(to_string(p) == "2 + x1 + x3 + x1^2");
}

TEST_CASE("exact linear algebra") {
  RationalMatrix m(3, 3);
  const int v[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  const auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  for (const auto& entry : m.apply(ker[0])) CHECK(entry == 0);
  CHECK_FALSE(inverse(m).has_value());
  CHECK_FALSE(solve(m, {1, 0, 0}).has_value());

  const auto b = solve_min_norm(m, {6, 15, 24});
  REQUIRE(b.has_value());
  CHECK(m.apply(*b) == RationalVector{6, 15, 24});
  Rational dot = 0;
  for (int i = 0; i < 3; ++i) dot += (*b)[i] * ker[0][i];
  CHECK(dot == 0);

  m(2, 2) = 10;
  CHECK(determinant(m) == -3);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == RationalMatrix::identity(3));
  CHECK(minor(m, {0, 1}, {0, 1}) == -3);
}
