#include "g2calc/g2.hpp"

#include <cmath>
#include <stdexcept>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

constexpr int kDim = 7;

Form signed_sum(std::initializer_list<std::pair<int, MultiIndex>> terms) {
  Form out(kDim, terms.begin()->second.grade());
  for (const auto& [sign, index] : terms) out += Form::basis(kDim, index, Rational(sign));
  return out;
}

void require_dim7(int dim) {
  if (dim != kDim) throw DimensionError("G2 operations live on R^7");
}

void require_grade(int grade, int expected, const char* what) {
  if (grade != expected) throw GradeError(std::string(what) + " needs grade " + std::to_string(expected));
}

}  // namespace

Form standard_phi() {
  return signed_sum({{1, {1, 2, 3}},
                     {1, {1, 4, 5}},
                     {1, {1, 6, 7}},
                     {1, {2, 4, 6}},
                     {-1, {2, 5, 7}},
                     {-1, {3, 4, 7}},
                     {-1, {3, 5, 6}}});
}

Form standard_star_phi() {
  return signed_sum({{1, {4, 5, 6, 7}},
                     {1, {2, 3, 6, 7}},
                     {1, {2, 3, 4, 5}},
                     {1, {1, 3, 5, 7}},
                     {-1, {1, 3, 4, 6}},
                     {-1, {1, 2, 5, 6}},
                     {-1, {1, 2, 4, 7}}});
}

G2Context::G2Context()
    : phi_(standard_phi()),
      star_phi_(standard_star_phi()),
      metric_(Metric::euclidean(kDim)),
      vol_(metric_.volume()),
      msymp3_(MsympStructure::build(phi_)),
      msymp4_(MsympStructure::build(star_phi_)) {
  if (!d(phi_).is_zero() || !d(star_phi_).is_zero()) throw std::logic_error("G2 forms are not closed");
  if (!(star(metric_, phi_) == star_phi_)) throw std::logic_error("⋆φ0 does not match the Hodge star of φ0");
  MetricReport report = recover_metric(phi_);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (std::fabs(report.g[i][j] - (i == j ? 1.0 : 0.0)) > 1e-12) {
        throw std::logic_error("φ0 does not recover the Euclidean metric");
      }
    }
  }
}

G2Context standard_context() { return G2Context(); }

const G2Context& shared_context() {
  static const G2Context ctx;
  return ctx;
}

MultiVector cross(const G2Context& ctx, const MultiVector& x, const MultiVector& y) {
  require_dim7(x.dim());
  require_grade(x.grade(), 1, "cross product");
  require_grade(y.grade(), 1, "cross product");
  return sharp(ctx.metric(), contract(wedge(x, y), ctx.phi()));
}

Form star_phi_wedge(const G2Context& ctx, const Form& beta) {
  require_dim7(beta.dim());
  return star(ctx.metric(), wedge(ctx.phi(), beta));
}

TwoFormSplit split2(const G2Context& ctx, const Form& beta) {
  require_dim7(beta.dim());
  require_grade(beta.grade(), 2, "the 7 + 14 splitting");
  const Form image = star_phi_wedge(ctx, beta);
  const Rational third(1, 3);
  TwoFormSplit out{(beta + image) * third, (Rational(2) * beta - image) * third};
  return out;
}

Form pi7(const G2Context& ctx, const Form& beta) { return split2(ctx, beta).beta7; }

Form pi14(const G2Context& ctx, const Form& beta) { return split2(ctx, beta).beta14; }

MultiVector invert_starphi2(const G2Context& ctx, const Form& beta) {
  TwoFormSplit split = split2(ctx, beta);
  return Rational(1, 2) * sharp(ctx.metric(), split.beta7) - sharp(ctx.metric(), split.beta14);
}

std::string Classification::witness_text() const {
  if (witness_form) return to_string(*witness_form);
  if (witness_vector) return to_string(*witness_vector);
  return "";
}

namespace {

Classification classify_vector(const MsympStructure& s, const MultiVector& q, int max_grade) {
  require_dim7(q.dim());
  if (q.grade() < 1 || q.grade() > max_grade) {
    throw GradeError("classification accepts multivectors of grade 1.." + std::to_string(max_grade));
  }
  Classification out;
  out.object = to_string(q);
  out.grade = q.grade();
  const Form contraction = contract(q, s.omega());
  out.closed_contraction = d(contraction).is_zero();
  if (*out.closed_contraction) {
    // Closed polynomial forms on R^7 are exact.
    Form alpha = antiderivative(contraction);
    if (!(d(alpha) == contraction)) throw std::logic_error("primitive of a closed form failed to verify");
    out.hamiltonian = true;
    out.witness_form = std::move(alpha);
  }
  return out;
}

Classification classify_form(const MsympStructure& s, const Form& alpha, int max_grade) {
  require_dim7(alpha.dim());
  if (alpha.grade() < 0 || alpha.grade() > max_grade) {
    throw GradeError("classification accepts forms of grade 0.." + std::to_string(max_grade));
  }
  Classification out;
  out.object = to_string(alpha);
  out.is_form = true;
  out.grade = alpha.grade();
  SolveResult solved = solve_hamiltonian(s, alpha);
  if (solved.status != SolveStatus::none) {
    out.hamiltonian = true;
    out.witness_vector = std::move(solved.particular);
  }
  return out;
}

}  // namespace

Classification classify_rochesterian(const G2Context& ctx, const MultiVector& q) {
  return classify_vector(ctx.msymp3(), q, 2);
}

Classification classify_rochesterian(const G2Context& ctx, const Form& alpha) {
  Classification out = classify_form(ctx.msymp3(), alpha, 1);
  if (alpha.grade() == 1) {
    out.projection_test = pi14(ctx, d(alpha)).is_zero();
    if (*out.projection_test != out.hamiltonian) {
      throw std::logic_error("projection test and linear solve disagree on " + out.object);
    }
  }
  return out;
}

Classification classify_corochesterian(const G2Context& ctx, const MultiVector& q) {
  return classify_vector(ctx.msymp4(), q, 3);
}

Classification classify_corochesterian(const G2Context& ctx, const Form& alpha) {
  if (alpha.grade() == 1) {
    require_dim7(alpha.dim());
    Classification out;
    out.object = to_string(alpha);
    out.is_form = true;
    out.grade = 1;
    MultiVector q = invert_starphi2(ctx, d(alpha));
    if (!(contract(q, ctx.star_phi()) == d(alpha))) {
      throw std::logic_error("⋆φ contraction failed to invert on " + out.object);
    }
    out.hamiltonian = true;
    out.witness_vector = std::move(q);
    return out;
  }
  return classify_form(ctx.msymp4(), alpha, 2);
}

NormIdentityCheck check_norm_identity(const G2Context& ctx, const MultiVector& q) {
  require_dim7(q.dim());
  require_grade(q.grade(), 2, "the norm identity");
  const Metric& g = ctx.metric();
  const Form q_phi = contract(q, ctx.phi());
  const Form q_star_phi = contract(q, ctx.star_phi());
  NormIdentityCheck out{Form(kDim, 7), Form(kDim, 7), false, inner(g, q_phi, q_phi), false};
  out.lhs = wedge(wedge(q_star_phi, q_phi), ctx.star_phi());
  out.rhs = (Rational(2) * out.norm_sq) * ctx.vol();
  out.equal = out.lhs == out.rhs;
  const Form q_phi_star_phi = wedge(q_phi, ctx.star_phi());
  out.intermediate_equal = inner(g, q_phi_star_phi, q_phi_star_phi) == Rational(3) * out.norm_sq;
  return out;
}

std::vector<IdentificationFact> theorem_identification_report(const G2Context& ctx) {
  std::vector<IdentificationFact> facts;
  auto add = [&](std::string name, bool holds, std::string detail) {
    facts.push_back({std::move(name), holds, std::move(detail)});
  };
  auto rank_text = [](const ContractionMap& m) {
    return "rank " + std::to_string(m.rank) + " of " + std::to_string(m.target_basis.size()) + "x" +
           std::to_string(m.source_basis.size()) + ", kernel dim " + std::to_string(m.kernel.size());
  };
  const Metric& g = ctx.metric();
  const auto& phi1 = ctx.msymp3().map(1);
  const auto& phi2 = ctx.msymp3().map(2);
  const auto& sphi1 = ctx.msymp4().map(1);
  const auto& sphi2 = ctx.msymp4().map(2);
  const auto& sphi3 = ctx.msymp4().map(3);

  add("phi_1 injective", phi1.rank == 7 && phi1.injective(), rank_text(phi1));
  add("phi_2 surjective with 14-dim kernel", phi2.rank == 7 && phi2.surjective() && phi2.kernel.size() == 14,
      rank_text(phi2));
  add("starphi_1 injective", sphi1.injective(), rank_text(sphi1));
  add("starphi_2 bijective", sphi2.rank == 21 && sphi2.injective() && sphi2.surjective(), rank_text(sphi2));
  add("starphi_3 surjective", sphi3.surjective(), rank_text(sphi3));

  // Ω²₇ and Ω²₁₄ dimensions from the ranks of the projections on the 21 basis 2-forms.
  const auto basis2 = all_multi_indices(kDim, 2);
  auto projection_rank = [&](auto&& project) {
    RationalMatrix m(basis2.size(), basis2.size());
    for (std::size_t c = 0; c < basis2.size(); ++c) {
      Form image = project(Form::basis(kDim, basis2[c]));
      for (std::size_t r = 0; r < basis2.size(); ++r) m(r, c) = image.coefficient(basis2[r]).constant_term();
    }
    return rank(m);
  };
  const std::size_t dim7 = projection_rank([&](const Form& b) { return pi7(ctx, b); });
  const std::size_t dim14 = projection_rank([&](const Form& b) { return pi14(ctx, b); });
  add("dim Omega^2_7 = 7 and dim Omega^2_14 = 14", dim7 == 7 && dim14 == 14,
      "ranks " + std::to_string(dim7) + " and " + std::to_string(dim14));

  bool image_in_7 = true;
  for (int i = 1; i <= kDim; ++i) {
    Form beta = contract(e(kDim, i), ctx.phi());
    image_in_7 = image_in_7 && star_phi_wedge(ctx, beta) == Rational(2) * beta;
  }
  add("image(phi_1) = Omega^2_7", image_in_7 && phi1.rank == dim7,
      "all 7 generators satisfy *(phi^b) = 2b; image rank " + std::to_string(phi1.rank));

  bool kernel_in_14 = true;
  for (const auto& k : phi2.kernel) kernel_in_14 = kernel_in_14 && pi7(ctx, flat(g, k)).is_zero();
  add("ker(phi_2) = sharp(Omega^2_14)", kernel_in_14 && phi2.kernel.size() == dim14,
      std::to_string(phi2.kernel.size()) + " kernel vectors, all flat into Omega^2_14");

  bool injection_ok = true;
  RationalMatrix images(sphi2.source_basis.size(), kDim);
  for (int i = 1; i <= kDim; ++i) {
    Form alpha = antiderivative(contract(e(kDim, i), ctx.phi()));
    Form target = d(alpha);
    MultiVector u = invert_starphi2(ctx, target);
    injection_ok = injection_ok && contract(u, ctx.star_phi()) == target;
    RationalVector coords = to_coordinates(sphi2, u);
    for (std::size_t r = 0; r < coords.size(); ++r) images(r, i - 1) = coords[r];
  }
  const std::size_t injection_rank = rank(images);
  add("Omega^1_R(TM) -> Omega^2_cR(TM) injective", injection_ok && injection_rank == 7,
      "U = invert(d alpha) reproduces X⌟phi for all coordinate fields; image rank " +
          std::to_string(injection_rank));

  add("Omega~^2_R(TM) = Omega~^0_R: every df is hit by phi_2", phi2.surjective(), rank_text(phi2));
  add("Omega~^3_cR(TM) = Omega~^0_cR: every df is hit by starphi_3", sphi3.surjective(), rank_text(sphi3));
  add("Omega^1_cR = Omega^1: every 2-form is hit by starphi_2", sphi2.surjective(), rank_text(sphi2));
  return facts;
}

}  // namespace g2calc
