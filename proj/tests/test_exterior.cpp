#include <doctest.h>

#include <algorithm>
#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/exterior.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/sample.hpp"

using namespace g2calc;

namespace {

// Sign of the permutation sorting the concatenation of a and b, counted by inversions.
int brute_sign(MultiIndex a, MultiIndex b) {
  if (!a.disjoint(b)) return 0;
  std::vector<int> seq = a.axes();
  for (int i : b.axes()) seq.push_back(i);
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j];
  return inversions % 2 ? -1 : 1;
}

Form dxi(MultiIndex m, int n = 7) { return Form::basis(n, m); }
Polynomial x(int i, int n = 7) { return Polynomial::variable(n, i); }

// α(X1, …, Xl) for constant vectors given as coordinate columns, via the determinant expansion.
Rational evaluate_on(const Form& alpha, const std::vector<std::vector<Rational>>& vs) {
  Rational total = 0;
  for (const auto& [idx, f] : alpha.terms()) {
    const auto axes = idx.axes();
    std::vector<int> perm(axes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      int inv = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
      Rational prod = inv % 2 ? -1 : 1;
      for (std::size_t i = 0; i < perm.size(); ++i) prod *= vs[i][axes[perm[i]] - 1];
      total += f.constant_term() * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

}  // namespace

TEST_CASE("merge_sign agrees with the inversion count") {
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 64; ++b)
      CHECK(merge_sign(MultiIndex::from_bits(a), MultiIndex::from_bits(b)) ==
            brute_sign(MultiIndex::from_bits(a), MultiIndex::from_bits(b)));
}

TEST_CASE("multi-index basics") {
  CHECK(all_multi_indices(7, 3).size() == 35);
  CHECK(index_label(MultiIndex{2, 3}) == "23");
  CHECK(MultiIndex{1, 2} < MultiIndex{1, 3});
  CHECK(MultiIndex{3} < MultiIndex{1, 2});
}

TEST_CASE("wedge") {
  const auto a = dx(7, 1), b = dx(7, 2);
  CHECK(wedge(a, b) == dxi({1, 2}));
  CHECK(wedge(b, a) == -dxi({1, 2}));
  CHECK(wedge(a, a).is_zero());
  const auto phi = standard_phi();
  CHECK(wedge(phi, dxi({2, 3}) - dxi({4, 5})) == dxi({1, 2, 3, 6, 7}) - dxi({1, 4, 5, 6, 7}));
  CHECK_THROWS_AS(wedge(dx(3, 1), dx(4, 1)), DimensionError);
}

TEST_CASE("wedge is graded commutative and associative") {
  Sampler s(5);
  for (int t = 0; t < 100; ++t) {
    const int p = s.integer(0, 3), q = s.integer(0, 3), r = s.integer(0, 2);
    const auto a = s.form(6, p), b = s.form(6, q), c = s.form(6, r);
    CHECK(same_element(wedge(a, b), ((p * q) % 2 ? -1 : 1) * wedge(b, a)));
    CHECK(same_element(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
    CHECK(same_element(d(wedge(a, b)), wedge(d(a), b) + (p % 2 ? -1 : 1) * wedge(a, d(b))));
  }
}

TEST_CASE("contraction of phi0 by a general vector") {
  const auto phi = standard_phi();
  MultiVector X(7, 1);
  for (int i = 1; i <= 7; ++i) X += x(i) * e(7, i);
  // The seven lines of X⌟φ0, one per component.
  const Form lines[7] = {
      dxi({2, 3}) + dxi({4, 5}) + dxi({6, 7}),
      -dxi({1, 3}) + dxi({4, 6}) - dxi({5, 7}),
      dxi({1, 2}) - dxi({4, 7}) - dxi({5, 6}),
      -dxi({1, 5}) - dxi({2, 6}) + dxi({3, 7}),
      dxi({1, 4}) + dxi({2, 7}) + dxi({3, 6}),
      -dxi({1, 7}) + dxi({2, 4}) - dxi({3, 5}),
      dxi({1, 6}) - dxi({2, 5}) - dxi({3, 4}),
  };
  Form expected(7, 2);
  for (int i = 0; i < 7; ++i) {
    CHECK(contract(e(7, i + 1), phi) == lines[i]);
    expected += x(i + 1) * lines[i];
  }
  CHECK(contract(X, phi) == expected);
}

TEST_CASE("contraction fills the leading slots") {
  // (X1∧…∧Xq)⌟α evaluated on Y agrees with α(X1, …, Xq, Y…).
  Sampler s(9);
  for (int t = 0; t < 60; ++t) {
    const int l = s.integer(1, 4), q = s.integer(1, l);
    const auto alpha = s.constant_form(5, l, 4);
    std::vector<std::vector<Rational>> vs;
    for (int i = 0; i < l; ++i) {
      std::vector<Rational> v;
      for (int j = 0; j < 5; ++j) v.push_back(s.integer(-2, 2));
      vs.push_back(v);
    }
    MultiVector Q = MultiVector::scalar(Polynomial::constant(5, 1));
    for (int i = 0; i < q; ++i) {
      MultiVector xi(5, 1);
      for (int j = 0; j < 5; ++j) xi += vs[i][j] * e(5, j + 1);
      Q = wedge(Q, xi);
    }
    const auto rest = std::vector<std::vector<Rational>>(vs.begin() + q, vs.end());
    CHECK(evaluate_on(contract(Q, alpha), rest) == evaluate_on(alpha, vs));
  }
}

TEST_CASE("contraction is an antiderivation for vectors") {
  Sampler s(21);
  for (int t = 0; t < 100; ++t) {
    const int p = s.integer(1, 3), q = s.integer(0, 3);
    const auto X = s.multivector(6, 1);
    const auto a = s.form(6, p), b = s.form(6, q);
    CHECK(same_element(contract(X, wedge(a, b)),
                       wedge(contract(X, a), b) + (p % 2 ? -1 : 1) * wedge(a, contract(X, b))));
  }
}

TEST_CASE("exterior derivative") {
  const auto a1 = x(2) * dx(7, 3) + x(4) * dx(7, 5) + x(6) * dx(7, 7);
  CHECK(d(a1) == dxi({2, 3}) + dxi({4, 5}) + dxi({6, 7}));
  CHECK(d(a1) == contract(e(7, 1), standard_phi()));
  CHECK(d(x(4) * dx(7, 5) + x(2) * dx(7, 3)) == dxi({4, 5}) + dxi({2, 3}));
  Sampler s(3);
  for (int t = 0; t < 50; ++t) {
    CHECK(d(d(Form::scalar(s.polynomial(7, 3, 3)))).is_zero());
    CHECK(d(d(s.form(7, s.integer(1, 4), 3))).is_zero());
  }
}

TEST_CASE("pointwise evaluation") {
  std::vector<Rational> p(7, 0);
  p[0] = 3;
  CHECK(eval_at(x(1) * dx(7, 2), p) == 3 * dx(7, 2));
  CHECK(eval_at(standard_phi(), p) == standard_phi());
  std::vector<Rational> origin(7, 0);
  CHECK(eval_at(x(4) * dx(7, 5) + x(2) * dx(7, 3), origin).is_zero());
}

TEST_CASE("radial primitive") {
  Sampler s(8);
  for (int t = 0; t < 60; ++t) {
    const auto a = d(s.form(5, s.integer(0, 3), 3));
    CHECK(same_element(d(antiderivative(a)), a));
  }
}

TEST_CASE("grade and axis errors") {
  CHECK_THROWS_AS(dx(3, 4), GradeError);
  CHECK_THROWS_AS(e(3, 0), GradeError);
  CHECK_THROWS_AS(contract(e(4, 1), dx(3, 1)), DimensionError);
}

TEST_CASE("e6^e6 vanishes; e6^e7 carries the worked contraction") {
  const auto q66 = wedge(e(7, 6), e(7, 6));
  CHECK(q66.is_zero());
  CHECK(contract(q66, standard_star_phi()).is_zero());
  const auto q67 = wedge(e(7, 6), e(7, 7));
  CHECK(contract(q67, standard_star_phi()) == dxi({4, 5}) + dxi({2, 3}));
  CHECK(contract(q67, standard_phi()) == dx(7, 1));
}

TEST_CASE("contraction by a wedge nests left to right") {
  Sampler s(41);
  for (int t = 0; t < 60; ++t) {
    const auto X = s.multivector(6, s.integer(1, 2)), Y = s.multivector(6, s.integer(0, 2));
    const auto a = s.form(6, s.integer(0, 6));
    CHECK(same_element(contract(wedge(X, Y), a), contract(Y, contract(X, a))));
  }
}
