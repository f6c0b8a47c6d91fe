#include "g2calc/hodge.hpp"

#include <cmath>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

std::vector<int> zero_based(MultiIndex m) {
  std::vector<int> out = m.axes();
  for (auto& a : out) --a;
  return out;
}

int parity_sign(long long exponent) { return (((exponent % 2) + 2) % 2) == 0 ? 1 : -1; }

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

void check_dim(const Metric& g, int dim) {
  if (g.dim() != dim) {
    throw DimensionError("metric on R^" + std::to_string(g.dim()) + " applied to an object on R^" +
                         std::to_string(dim));
  }
}

}  // namespace

Metric::Metric(RationalMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DimensionError("metric matrix must be square");
  if (g_.rows() > static_cast<std::size_t>(kMaxDim)) throw DimensionError("metric dimension too large");
  if (!g_.is_symmetric()) throw DimensionError("metric matrix must be symmetric");
  auto inv = g2calc::inverse(g_);
  if (!inv) throw DegenerateFormError("metric matrix is singular");
  g_inv_ = std::move(*inv);
  det_ = g2calc::determinant(g_);
  euclidean_ = g_ == RationalMatrix::identity(g_.rows());
  // Sylvester: all leading principal minors positive.
  positive_definite_ = true;
  std::vector<int> lead;
  for (std::size_t k = 0; k < g_.rows(); ++k) {
    lead.push_back(static_cast<int>(k));
    if (sgn(minor(g_, lead, lead)) <= 0) {
      positive_definite_ = false;
      break;
    }
  }
  volume_factor_ = rational_sqrt(det_);
}

Metric Metric::euclidean(int n) { return Metric(RationalMatrix::identity(n)); }

Metric Metric::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return Metric(std::move(m));
}

Form Metric::volume() const {
  if (!volume_factor_) throw UnsupportedError("√det g is irrational; volume form not representable over Q");
  return Form::basis(dim(), MultiIndex::full(dim()), *volume_factor_);
}

Rational Metric::vector_gram(MultiIndex i, MultiIndex j) const {
  if (i.grade() != j.grade()) return 0;
  if (euclidean_) return i == j ? 1 : 0;
  return minor(g_, zero_based(i), zero_based(j));
}

Rational Metric::covector_gram(MultiIndex i, MultiIndex j) const {
  if (i.grade() != j.grade()) return 0;
  if (euclidean_) return i == j ? 1 : 0;
  return minor(g_inv_, zero_based(i), zero_based(j));
}

Form flat(const Metric& g, const MultiVector& q) {
  check_dim(g, q.dim());
  Form out(q.dim(), q.grade());
  if (!q.in_range()) return out;
  if (g.is_euclidean()) {
    for (const auto& [index, f] : q.terms()) out.add_term(index, f);
    return out;
  }
  const auto targets = all_multi_indices(q.dim(), q.grade());
  for (const auto& [index, f] : q.terms()) {
    for (MultiIndex j : targets) {
      Rational c = g.vector_gram(index, j);
      if (sgn(c) != 0) out.add_term(j, f * c);
    }
  }
  return out;
}

MultiVector sharp(const Metric& g, const Form& alpha) {
  check_dim(g, alpha.dim());
  MultiVector out(alpha.dim(), alpha.grade());
  if (!alpha.in_range()) return out;
  if (g.is_euclidean()) {
    for (const auto& [index, f] : alpha.terms()) out.add_term(index, f);
    return out;
  }
  const auto targets = all_multi_indices(alpha.dim(), alpha.grade());
  for (const auto& [index, f] : alpha.terms()) {
    for (MultiIndex j : targets) {
      Rational c = g.covector_gram(index, j);
      if (sgn(c) != 0) out.add_term(j, f * c);
    }
  }
  return out;
}

Form star(const Metric& g, const Form& alpha) {
  check_dim(g, alpha.dim());
  const int n = alpha.dim();
  Form out(n, n - alpha.grade());
  if (!alpha.in_range() || alpha.is_zero()) return out;
  if (!g.is_positive_definite()) throw UnsupportedError("Hodge star needs a Riemannian metric");
  if (!g.volume_factor()) throw UnsupportedError("√det g is irrational; Hodge star not representable over Q");
  const Rational& vol = *g.volume_factor();
  const MultiIndex top = MultiIndex::full(n);
  if (g.is_euclidean()) {
    for (const auto& [index, f] : alpha.terms()) {
      MultiIndex rest = top.minus(index);
      Polynomial c = f;
      if (merge_sign(index, rest) < 0) c *= Rational(-1);
      out.add_term(rest, c);
    }
    return out;
  }
  // dx_K ∧ ⋆dx_I = g(dx_K, dx_I) Vol fixes the coefficient on dx_{K^c}.
  const auto partners = all_multi_indices(n, alpha.grade());
  for (const auto& [index, f] : alpha.terms()) {
    for (MultiIndex k : partners) {
      Rational c = g.covector_gram(k, index);
      if (sgn(c) == 0) continue;
      MultiIndex rest = top.minus(k);
      c *= vol * merge_sign(k, rest);
      out.add_term(rest, f * c);
    }
  }
  return out;
}

Polynomial inner(const Metric& g, const Form& alpha, const Form& beta) {
  check_dim(g, alpha.dim());
  check_dim(g, beta.dim());
  if (alpha.grade() != beta.grade()) {
    throw GradeError("inner product of a " + std::to_string(alpha.grade()) + "-form with a " +
                     std::to_string(beta.grade()) + "-form");
  }
  Polynomial out(alpha.dim());
  if (g.is_euclidean()) {
    for (const auto& [index, f] : alpha.terms()) {
      auto it = beta.terms().find(index);
      if (it != beta.terms().end()) out += f * it->second;
    }
    return out;
  }
  for (const auto& [ia, fa] : alpha.terms()) {
    for (const auto& [ib, fb] : beta.terms()) {
      Rational c = g.covector_gram(ia, ib);
      if (sgn(c) != 0) out += (fa * fb) * c;
    }
  }
  return out;
}

ContractionIdentityReport check_contraction_identities(const Metric& g, const MultiVector& q, const Form& alpha) {
  check_dim(g, q.dim());
  check_dim(g, alpha.dim());
  const long long n = alpha.dim();
  const long long ql = q.grade();
  const long long l = alpha.grade();
  const Form qflat = flat(g, q);
  const Form star_alpha = star(g, alpha);

  ContractionIdentityReport report{
      {Form(int(n), 0), Form(int(n), 0), Form(int(n), 0), Form(int(n), 0)},
      {Form(int(n), 0), Form(int(n), 0), Form(int(n), 0), Form(int(n), 0)},
      {}};

  report.lhs[0] = star(g, contract(q, alpha));
  report.rhs[0] = parity_sign(ql * (l - ql)) * wedge(qflat, star_alpha);

  report.lhs[1] = star(g, contract(q, star_alpha));
  report.rhs[1] = parity_sign(ql * (n - l - ql) + l * (n - l)) * wedge(qflat, alpha);

  report.lhs[2] = contract(q, alpha);
  report.rhs[2] = parity_sign((l - ql) * (n - l)) * star(g, wedge(qflat, star_alpha));

  report.lhs[3] = contract(q, star_alpha);
  report.rhs[3] = parity_sign(l * ql) * star(g, wedge(qflat, alpha));

  for (int i = 0; i < 4; ++i) report.holds[i] = same_element(report.lhs[i], report.rhs[i]);
  return report;
}

RationalMatrix metric_numerator(const Form& phi) {
  if (phi.dim() != 7) throw DimensionError("metric recovery works on R^7");
  if (phi.grade() != 3) throw GradeError("metric recovery needs a 3-form");
  if (!phi.is_constant()) throw UnsupportedError("metric recovery needs constant coefficients");
  const MultiIndex top = MultiIndex::full(7);
  std::vector<Form> contractions;
  for (int i = 1; i <= 7; ++i) contractions.push_back(contract(e(7, i), phi));
  RationalMatrix b(7, 7);
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      Form top_form = wedge(wedge(contractions[i], contractions[j]), phi);
      b(i, j) = top_form.coefficient(top).constant_term();
      b(j, i) = b(i, j);
    }
  }
  return b;
}

namespace {

double determinant(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace

MetricReport recover_metric(const Form& phi) {
  const RationalMatrix b = metric_numerator(phi);
  const Rational det_b = g2calc::determinant(b);
  if (sgn(det_b) <= 0) throw DegenerateFormError("non-generic or orientation-incompatible 3-form (det B <= 0)");

  Rational six_pow_seven = 1;
  for (int i = 0; i < 7; ++i) six_pow_seven *= 6;
  // (det B / 6^7)^{1/9} as two cube roots.
  const double scale = std::cbrt(std::cbrt(Rational(det_b / six_pow_seven).get_d()));

  MetricReport report;
  report.g.assign(7, std::vector<double>(7, 0.0));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) report.g[i][j] = b(i, j).get_d() / (6.0 * scale);
  }
  const double vol = std::sqrt(determinant(report.g));
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      double defect = std::fabs(b(i, j).get_d() - 6.0 * report.g[i][j] * vol);
      report.residual = std::max(report.residual, defect);
    }
  }
  return report;
}

}  // namespace g2calc
