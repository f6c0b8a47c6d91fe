#include <doctest.h>

#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/sample.hpp"

using namespace g2calc;

namespace {

Form dxi(MultiIndex m, int n = 7) { return Form::basis(n, m); }
MultiVector ei(MultiIndex m, int n = 7) { return MultiVector::basis(n, m); }

Metric block_metric(int n) {
  // [[5,4],[4,5]] on the first two axes, then 1, 4, 1/4, ...; √det g = 3 * 1 * 2 * 1/2 ...
  RationalMatrix g = RationalMatrix::identity(n);
  g(0, 0) = 5;
  g(0, 1) = 4;
  g(1, 0) = 4;
  g(1, 1) = 5;
  for (int i = 2; i < n; ++i) g(i, i) = i % 3 == 0 ? Rational(4) : i % 3 == 1 ? Rational(1, 4) : Rational(1);
  return Metric(g);
}

// <dx_I, dx_J> straight from the Gram determinant of rows I, columns J of g⁻¹.
Rational gram_oracle(const Metric& g, MultiIndex i, MultiIndex j) {
  std::vector<int> rows, cols;
  for (int a : i.axes()) rows.push_back(a - 1);
  for (int b : j.axes()) cols.push_back(b - 1);
  if (rows.empty()) return 1;
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = g.inverse_matrix()(rows[r], cols[c]);
  return determinant(m);
}

}  // namespace

TEST_CASE("flat and sharp") {
  const auto eu = Metric::euclidean(7);
  CHECK(flat(eu, ei({6, 7})) == dxi({6, 7}));
  const auto f = Polynomial::variable(7, 2);
  CHECK(flat(eu, MultiVector::scalar(f)) == Form::scalar(f));
  std::vector<Rational> diag(7, 1);
  diag[0] = 2;
  const auto g = Metric::diagonal(diag);
  CHECK(flat(g, e(7, 1)) == 2 * dx(7, 1));
  CHECK(sharp(eu, dxi({2, 3})) == ei({2, 3}));
  CHECK(sharp(g, dx(7, 1)) == Rational(1, 2) * e(7, 1));
  Sampler s(4);
  const auto b = block_metric(5);
  for (int t = 0; t < 50; ++t) {
    const auto q = s.multivector(5, s.integer(0, 5));
    CHECK(same_element(sharp(b, flat(b, q)), q));
  }
}

TEST_CASE("euclidean star") {
  const auto eu = Metric::euclidean(7);
  CHECK(star(eu, standard_phi()) == standard_star_phi());
  CHECK(star(eu, dxi({1, 2, 3, 6, 7})) == dxi({4, 5}));
  CHECK(star(eu, Form::scalar(Polynomial::constant(7, 1))) == eu.volume());
}

TEST_CASE("star on a non-diagonal metric") {
  RationalMatrix m(2, 2);
  m(0, 0) = 5;
  m(0, 1) = 4;
  m(1, 0) = 4;
  m(1, 1) = 5;
  const Metric g(m);
  REQUIRE(g.volume_factor().has_value());
  CHECK(*g.volume_factor() == 3);
  // dx1∧⋆dx1 = g¹¹·3 dx12 and dx2∧⋆dx1 = g²¹·3 dx12.
  CHECK(star(g, dx(2, 1)) == Rational(4, 3) * dx(2, 1) + Rational(5, 3) * dx(2, 2));
}

TEST_CASE("star obeys its defining property") {
  Sampler s(12);
  for (int n : {4, 5, 6}) {
    const Metric metrics[] = {Metric::euclidean(n), s.square_diagonal_metric(n), block_metric(n)};
    for (const auto& g : metrics) {
      for (int l = 0; l <= n; ++l) {
        for (MultiIndex i : all_multi_indices(n, l))
          for (MultiIndex j : all_multi_indices(n, l)) {
            CHECK(g.covector_gram(i, j) == gram_oracle(g, i, j));
            const auto lhs = wedge(Form::basis(n, i), star(g, Form::basis(n, j)));
            CHECK(lhs == gram_oracle(g, i, j) * g.volume());
          }
        const auto a = s.form(n, l);
        const int sign = (l * (n - l)) % 2 ? -1 : 1;
        CHECK(same_element(star(g, star(g, a)), sign * a));
      }
    }
  }
}

TEST_CASE("inner product") {
  const auto eu = Metric::euclidean(7);
  CHECK(inner(eu, dxi({1, 2}), dxi({1, 2})) == Polynomial::constant(7, 1));
  CHECK(inner(eu, dxi({1, 2}), dxi({1, 3})).is_zero());
  const auto c = contract(ei({6, 7}), standard_phi());
  CHECK(inner(eu, c, c) == Polynomial::constant(7, 1));
  CHECK_THROWS_AS(inner(eu, dxi({1, 2}), dx(7, 1)), GradeError);
}

TEST_CASE("contraction identities") {
  const auto eu = Metric::euclidean(7);
  const auto worked = check_contraction_identities(eu, ei({6, 7}), standard_phi());
  CHECK(worked.all());
  CHECK(contract(ei({6, 7}), standard_star_phi()) == star(eu, wedge(dxi({6, 7}), standard_phi())));

  Sampler s(30);
  const auto f = MultiVector::scalar(Polynomial::constant(6, 3));
  const auto a = s.form(6, 2);
  CHECK(check_contraction_identities(Metric::euclidean(6), f, a).all());
  CHECK(star(Metric::euclidean(6), 3 * a) == 3 * star(Metric::euclidean(6), a));

  for (int t = 0; t < 80; ++t) {
    const int n = s.integer(3, 6);
    const int l = s.integer(0, n), q = s.integer(0, l);
    const Metric g = t % 2 ? s.square_diagonal_metric(n) : block_metric(n);
    const auto report = check_contraction_identities(g, s.multivector(n, q), s.form(n, l));
    CHECK(report.all());
  }
}

TEST_CASE("metric errors") {
  std::vector<Rational> indefinite(3, 1);
  indefinite[2] = -1;
  CHECK_THROWS_AS(star(Metric::diagonal(indefinite), dx(3, 1)), UnsupportedError);
  std::vector<Rational> irrational(3, 1);
  irrational[0] = 2;
  CHECK_THROWS_AS(star(Metric::diagonal(irrational), dx(3, 1)), UnsupportedError);
  CHECK_THROWS_AS(Metric(RationalMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(Metric::diagonal({1, 0}), DegenerateFormError);
  CHECK_THROWS_AS(flat(Metric::euclidean(3), e(4, 1)), DimensionError);
}

TEST_CASE("metric recovery") {
  const auto id = recover_metric(standard_phi());
  CHECK(id.residual < 1e-12);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(id.g[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));
  const auto scaled = recover_metric(8 * standard_phi());
  CHECK(scaled.residual < 1e-10);
  CHECK(scaled.g[0][0] == doctest::Approx(4.0));
  CHECK_THROWS_AS(recover_metric(dxi({1, 2, 3})), DegenerateFormError);
  CHECK_THROWS_AS(recover_metric(dxi({1, 2})), GradeError);
}
