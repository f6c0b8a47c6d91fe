#include "g2calc/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "g2calc/errors.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/msymp.hpp"
#include "g2calc/parser.hpp"
#include "g2calc/sample.hpp"
#include "g2calc/schouten.hpp"

namespace g2calc {

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool VerifyReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

namespace {

using Failure = std::optional<std::string>;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

int sign_of(long long exponent) { return (((exponent % 2) + 2) % 2) == 0 ? 1 : -1; }

Form F(std::string_view text) { return as_form(evaluate(text, Environment::standard(7))); }
MultiVector V(std::string_view text) { return as_multivector(evaluate(text, Environment::standard(7))); }

std::string pair_text(const HamiltonianPair& p) { return "(Q=" + to_string(p.q()) + ", α=" + to_string(p.alpha()) + ")"; }

std::string metric_text(const Metric& g) {
  if (g.is_euclidean()) return "Euclidean";
  std::string out = "diag(";
  for (int i = 0; i < g.dim(); ++i) out += (i ? "," : "") + to_string(g.matrix()(i, i));
  return out + ")";
}

Failure unless(bool ok, const std::function<std::string()>& describe) {
  if (ok) return std::nullopt;
  return describe();
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) {
    report_.seed = options.seed;
    report_.trials = options.trials;
  }

  void single(std::string name, std::string anchor, int criterion, const std::function<Failure()>& fn) {
    run(std::move(name), std::move(anchor), criterion, 1, [&](Sampler&, std::size_t) { return fn(); });
  }

  void randomized(std::string name, std::string anchor, int criterion, std::size_t count,
                  const std::function<Failure(Sampler&, std::size_t)>& fn) {
    run(std::move(name), std::move(anchor), criterion, count, fn);
  }

  VerifyReport take() { return std::move(report_); }

 private:
  void run(std::string name, std::string anchor, int criterion, std::size_t count,
           const std::function<Failure(Sampler&, std::size_t)>& fn) {
    VerifyCheck check{std::move(name), std::move(anchor), criterion, true, count, "", 0.0};
    Sampler sampler(splitmix(report_.seed ^ splitmix(report_.checks.size() + 1)));
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < count; ++t) {
      Failure failure;
      try {
        failure = fn(sampler, t);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        check.passed = false;
        check.counterexample = "trial " + std::to_string(t) + ": " + *failure;
        break;
      }
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(check));
  }

  VerifyReport report_;
};

// ---------------------------------------------------------------------------
// Criterion 1 and 7: worked values.

void golden_checks(Runner& r, const G2Context& ctx) {
  r.single("contraction of a general vector field with phi0", "X⌟φ0 = X1(dx23+dx45+dx67) + … + X7(dx16−dx25−dx34)",
           1, [&]() -> Failure {
             const char* lines[7] = {"dx23 + dx45 + dx67", "-dx13 + dx46 - dx57", "dx12 - dx47 - dx56",
                                     "-dx15 - dx26 + dx37", "dx14 + dx27 + dx36", "-dx17 + dx24 - dx35",
                                     "dx16 - dx25 - dx34"};
             for (int i = 1; i <= 7; ++i) {
               Form got = contract(e(7, i), ctx.phi());
               if (!(got == F(lines[i - 1]))) {
                 return "∂" + std::to_string(i) + "⌟φ0 = " + to_string(got) + ", expected " + lines[i - 1];
               }
             }
             // Symbolic coefficients: X = Σ x_i ∂_i keeps every line attached to its own coefficient.
             MultiVector x(7, 1);
             Form expected(7, 2);
             for (int i = 1; i <= 7; ++i) {
               x.add_term(MultiIndex{i}, Polynomial::variable(7, i));
               expected += Polynomial::variable(7, i) * F(lines[i - 1]);
             }
             return unless(contract(x, ctx.phi()) == expected, [&] { return to_string(contract(x, ctx.phi())); });
           });
  r.single("(e6^e7) contracted with starphi0", "Q⌟⋆φ0 = dx45 + dx23", 1, [&]() -> Failure {
    Form got = contract(V("e6^e7"), ctx.star_phi());
    return unless(got == F("dx45 + dx23"), [&] { return to_string(got); });
  });
  r.single("(e6^e7) contracted with phi0", "Q⌟φ0 = dx1", 1, [&]() -> Failure {
    Form got = contract(V("e6^e7"), ctx.phi());
    return unless(got == F("dx1"), [&] { return to_string(got); });
  });
  r.single("Hodge star of phi0", "⋆φ0 = dx4567+dx2367+dx2345+dx1357−dx1346−dx1256−dx1247", 1, [&]() -> Failure {
    Form got = star(ctx.metric(), ctx.phi());
    Form expected = F("dx4567 + dx2367 + dx2345 + dx1357 - dx1346 - dx1256 - dx1247");
    return unless(got == expected && ctx.star_phi() == expected, [&] { return to_string(got); });
  });
  r.single("x4*dx5 + x2*dx3 is coRochesterian but not Rochesterian", "α = x4dx5+x2dx3, dα = Q⌟⋆φ0, Q = ∂6∧∂7", 1,
           [&]() -> Failure {
             const Form alpha = F("x4*dx5 + x2*dx3");
             Classification ro = classify_rochesterian(ctx, alpha);
             Classification co = classify_corochesterian(ctx, alpha);
             const bool ok = !ro.hamiltonian && ro.projection_test == false && co.hamiltonian &&
                             co.witness_vector && *co.witness_vector == V("e6^e7");
             return unless(ok, [&] { return "rochesterian=" + std::to_string(ro.hamiltonian) + " witness " + co.witness_text(); });
           });
  r.single("solver over starphi0 recovers e6^e7", "Q⌟⋆φ0 = dα, α = x4dx5+x2dx3", 1, [&]() -> Failure {
    SolveResult res = solve_hamiltonian(ctx.msymp4(), F("x4*dx5 + x2*dx3"));
    return unless(res.status == SolveStatus::unique && res.particular == V("e6^e7"),
                  [&] { return to_string(res.status) + " " + to_string(res.particular); });
  });
  r.single("solver over phi0 rejects x4*dx5 + x2*dx3", "α is not Rochesterian", 1, [&]() -> Failure {
    SolveResult res = solve_hamiltonian(ctx.msymp3(), F("x4*dx5 + x2*dx3"));
    return unless(res.status == SolveStatus::none, [&] { return to_string(res.status); });
  });
  r.single("solver over phi0 recovers e1", "Q⌟φ0 = d(x2dx3+x4dx5+x6dx7), Q = ∂1", 1, [&]() -> Failure {
    SolveResult res = solve_hamiltonian(ctx.msymp3(), F("x2*dx3 + x4*dx5 + x6*dx7"));
    return unless(res.status == SolveStatus::unique && res.particular == V("e1") && res.kernel_basis.empty(),
                  [&] { return to_string(res.status) + " " + to_string(res.particular); });
  });
  r.single("Hamiltonian bracket of the e1 and e2 pairs", "{α1,α2} = −(∂1∧∂2)⌟φ0 = −dx3", 1, [&]() -> Failure {
    HamiltonianPair p1(ctx.msymp3(), V("e1"), F("x2*dx3 + x4*dx5 + x6*dx7"));
    HamiltonianPair p2(ctx.msymp3(), V("e2"), F("-x1*dx3 + x4*dx6 - x5*dx7"));
    Form got = ham_bracket(ctx.msymp3(), p1, p2).form;
    return unless(got == F("-dx3"), [&] { return to_string(got); });
  });
  r.single("bracket-zero example over starphi0", "{α1,α2}=0 ⟺ L_{Q2}α1=0, Q1 = ∂6∧∂7, Q2 = ∂1∧∂2", 1,
           [&]() -> Failure {
             HamiltonianPair p1(ctx.msymp4(), V("e6^e7"), F("x4*dx5 + x2*dx3"));
             HamiltonianPair p2 = hamiltonian_pair(ctx.msymp4(), antiderivative(contract(V("e1^e2"), ctx.star_phi())));
             BracketZeroCheck c = check_bracket_zero_prop(ctx.msymp4(), p1, p2);
             return unless(c.agree && c.bracket_zero, [&] { return "bracket_zero=" + std::to_string(c.bracket_zero); });
           });

  r.single("e6^e7 is both Rochesterian and coRochesterian", "Q⌟φ0 = dx1 = d(x1), Q⌟⋆φ0 = d(x4dx5+x2dx3)", 7,
           [&]() -> Failure {
             const MultiVector q = V("e6^e7");
             Classification ro = classify_rochesterian(ctx, q);
             Classification co = classify_corochesterian(ctx, q);
             const bool ok = ro.hamiltonian && co.hamiltonian && ro.witness_form && *ro.witness_form == F("x1") &&
                             co.witness_form && quotient_equal(*co.witness_form, F("x4*dx5 + x2*dx3")) &&
                             !contract(q, ctx.phi()).is_zero() && !contract(q, ctx.star_phi()).is_zero();
             return unless(ok, [&] { return ro.witness_text() + " / " + co.witness_text(); });
           });
  r.single("norm identity at e6^e7", "(Q⌟⋆φ)∧(Q⌟φ)∧⋆φ = 2|Q⌟φ|²Vol with |dx1|² = 1", 7, [&]() -> Failure {
    NormIdentityCheck c = check_norm_identity(ctx, V("e6^e7"));
    return unless(c.equal && c.intermediate_equal && c.rhs == Rational(2) * ctx.vol(),
                  [&] { return to_string(c.lhs) + " vs " + to_string(c.rhs); });
  });
}

// ---------------------------------------------------------------------------
// Criterion 2: randomized identities.

struct IdentityCase {
  Metric g;
  MultiVector q;
  Form alpha;
};

IdentityCase identity_case(Sampler& s, std::size_t t) {
  constexpr int n = 7;
  std::vector<std::pair<int, int>> grades;
  for (int l = 0; l <= n; ++l) {
    for (int q = 0; q <= l; ++q) grades.emplace_back(q, l);
  }
  const auto [qg, l] = grades[t % grades.size()];
  Metric g = (t / grades.size()) % 2 == 0 ? Metric::euclidean(n) : s.square_diagonal_metric(n);
  return {std::move(g), s.multivector(n, qg, 1, 2), s.form(n, l, 1, 3)};
}

void identity_checks(Runner& r, std::size_t trials) {
  const char* anchors[4] = {"⋆(Q⌟α)=(−1)^{q(l−q)}Q♭∧⋆α", "⋆(Q⌟⋆α)=(−1)^{q(n−l−q)+l(n−l)}Q♭∧α",
                            "Q⌟α=(−1)^{(l−q)(n−l)}⋆(Q♭∧⋆α)", "Q⌟⋆α=(−1)^{lq}⋆(Q♭∧α)"};
  for (int i = 0; i < 4; ++i) {
    r.randomized("contraction/Hodge identity " + std::to_string(i + 1), anchors[i], 2, trials,
                 [i](Sampler& s, std::size_t t) -> Failure {
                   IdentityCase c = identity_case(s, t);
                   ContractionIdentityReport rep = check_contraction_identities(c.g, c.q, c.alpha);
                   return unless(rep.holds[i], [&] {
                     return "g=" + metric_text(c.g) + " Q=" + to_string(c.q) + " α=" + to_string(c.alpha) +
                            " lhs=" + to_string(rep.lhs[i]) + " rhs=" + to_string(rep.rhs[i]);
                   });
                 });
  }
}

void schouten_checks(Runner& r, std::size_t trials) {
  constexpr int n = 7;
  auto mv = [](Sampler& s, int lo) { return s.multivector(n, s.integer(lo, 3), 2, 2); };
  r.randomized("Schouten graded antisymmetry", "[Q1,Q2]=(−1)^{q1q2}[Q2,Q1]", 2, trials, [&](Sampler& s, std::size_t) {
    MultiVector a = mv(s, 0), b = mv(s, 0);
    MultiVector lhs = schouten(a, b);
    MultiVector rhs = sign_of(a.grade() * b.grade()) * schouten(b, a);
    return unless(same_element(lhs, rhs), [&] { return "Q1=" + to_string(a) + " Q2=" + to_string(b); });
  });
  r.randomized("Schouten Leibniz rule", "[Q1,Q2∧Q3]=[Q1,Q2]∧Q3+(−1)^{q1q2+q2}Q2∧[Q1,Q3]", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector a = mv(s, 0), b = mv(s, 0), c = mv(s, 0);
                 MultiVector lhs = schouten(a, wedge(b, c));
                 MultiVector rhs = wedge(schouten(a, b), c);
                 rhs += sign_of(a.grade() * b.grade() + b.grade()) * wedge(b, schouten(a, c));
                 return unless(same_element(lhs, rhs),
                               [&] { return "Q1=" + to_string(a) + " Q2=" + to_string(b) + " Q3=" + to_string(c); });
               });
  r.randomized("Schouten graded Jacobi identity", "(−1)^{q1(q3−1)}[Q1,[Q2,Q3]] + cyclic = 0", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector a = mv(s, 1), b = mv(s, 1), c = mv(s, 1);
                 const long long q1 = a.grade(), q2 = b.grade(), q3 = c.grade();
                 MultiVector sum = sign_of(q1 * (q3 - 1)) * schouten(a, schouten(b, c));
                 sum += sign_of(q2 * (q1 - 1)) * schouten(b, schouten(c, a));
                 sum += sign_of(q3 * (q2 - 1)) * schouten(c, schouten(a, b));
                 return unless(sum.is_zero(), [&] {
                   return "Q1=" + to_string(a) + " Q2=" + to_string(b) + " Q3=" + to_string(c) + " sum=" + to_string(sum);
                 });
               });
  r.randomized("exterior derivative of a Lie derivative", "dL_Qα=(−1)^{q+1}L_Qdα", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector q = mv(s, 0);
                 Form alpha = s.form(n, s.integer(0, 4), 2, 2);
                 Form lhs = d(lie_derivative(q, alpha));
                 Form rhs = sign_of(q.grade() + 1) * lie_derivative(q, d(alpha));
                 return unless(same_element(lhs, rhs), [&] { return "Q=" + to_string(q) + " α=" + to_string(alpha); });
               });
  r.randomized("Lie derivative along a wedge", "L_{Q1∧Q2}α=Q2⌟L_{Q1}α+(−1)^{q1}L_{Q2}(Q1⌟α)", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector a = mv(s, 0), b = mv(s, 0);
                 Form alpha = s.form(n, s.integer(0, 5), 2, 2);
                 Form lhs = lie_derivative(wedge(a, b), alpha);
                 Form rhs = contract(b, lie_derivative(a, alpha));
                 rhs += sign_of(a.grade()) * lie_derivative(b, contract(a, alpha));
                 return unless(same_element(lhs, rhs), [&] {
                   return "Q1=" + to_string(a) + " Q2=" + to_string(b) + " α=" + to_string(alpha);
                 });
               });
  r.randomized("Schouten bracket contracted with a form", "[Q1,Q2]⌟α=(−1)^{q1q2+q2}L_{Q1}(Q2⌟α)−Q2⌟L_{Q1}α", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector a = mv(s, 0), b = mv(s, 0);
                 Form alpha = s.form(n, s.integer(0, 5), 2, 2);
                 Form lhs = contract(schouten(a, b), alpha);
                 Form rhs = sign_of(a.grade() * b.grade() + b.grade()) * lie_derivative(a, contract(b, alpha));
                 rhs -= contract(b, lie_derivative(a, alpha));
                 return unless(same_element(lhs, rhs), [&] {
                   return "Q1=" + to_string(a) + " Q2=" + to_string(b) + " α=" + to_string(alpha);
                 });
               });
}

const MsympStructure& pick_structure(const G2Context& ctx, std::size_t t) { return t % 2 == 0 ? ctx.msymp3() : ctx.msymp4(); }

void bracket_checks(Runner& r, const G2Context& ctx, std::size_t trials) {
  r.randomized("Hamiltonian bracket graded commutativity", "{α2,α1}=(−1)^{q1q2}{α1,α2}", 2, trials,
               [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 HamiltonianPair p1 = s.hamiltonian_pair(S, s.integer(1, S.k()));
                 HamiltonianPair p2 = s.hamiltonian_pair(S, s.integer(1, S.k()));
                 Form a = ham_bracket(S, p1, p2).form;
                 Form b = ham_bracket(S, p2, p1).form;
                 return unless(same_element(b, sign_of(p1.lie_degree() * p2.lie_degree()) * a),
                               [&] { return pair_text(p1) + " " + pair_text(p2); });
               });
  r.randomized("exterior derivative of the Hamiltonian bracket", "d{α1,α2}=[Q1,Q2]⌟ω", 2, trials,
               [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 HamiltonianPair p1 = s.hamiltonian_pair(S, s.integer(1, S.k()));
                 HamiltonianPair p2 = s.hamiltonian_pair(S, s.integer(1, S.k()));
                 return unless(bracket_exterior_derivative_check(S, p1, p2),
                               [&] { return pair_text(p1) + " " + pair_text(p2); });
               });
  r.randomized("Jacobi defect of the Hamiltonian bracket", "(−1)^{q1(q3−1)}{α1,{α2,α3}} + cyclic = (−1)^{q3q2+q1q2+1}d(Q1⌟Q2⌟dα3)", 2, trials,
               [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 HamiltonianPair p1 = s.hamiltonian_pair(S, s.integer(1, S.k()), 2);
                 HamiltonianPair p2 = s.hamiltonian_pair(S, s.integer(1, S.k()), 2);
                 HamiltonianPair p3 = s.hamiltonian_pair(S, s.integer(1, S.k()), 2);
                 JacobiDefect j = jacobi_defect(S, p1, p2, p3);
                 const bool exact = same_element(j.rhs, d(j.primitive));
                 return unless(j.solvable && j.equal && exact, [&] {
                   return pair_text(p1) + " " + pair_text(p2) + " " + pair_text(p3) + " lhs=" + to_string(j.lhs) +
                          " rhs=" + to_string(j.rhs) + " " + j.status;
                 });
               });
}

void norm_checks(Runner& r, const G2Context& ctx, std::size_t trials) {
  r.randomized("norm identity for 2-multivectors", "(Q⌟⋆φ)∧(Q⌟φ)∧⋆φ=2|Q⌟φ|²Vol, |(Q⌟φ)∧⋆φ|²=3|Q⌟φ|²", 2, trials,
               [&](Sampler& s, std::size_t) {
                 MultiVector q = s.multivector(7, 2, 1, 3);
                 NormIdentityCheck c = check_norm_identity(ctx, q);
                 return unless(c.equal && c.intermediate_equal, [&] { return "Q=" + to_string(q); });
               });
}

// ---------------------------------------------------------------------------
// Criteria 3 to 6.

void rank_checks(Runner& r, const G2Context& ctx) {
  r.single("contraction ranks for phi0", "rank φ̂1 = 7, rank φ̂2 = 7, dim ker φ̂2 = 14", 3, [&]() -> Failure {
    const auto& m1 = ctx.msymp3().map(1);
    const auto& m2 = ctx.msymp3().map(2);
    return unless(m1.rank == 7 && m1.injective() && m2.rank == 7 && m2.kernel.size() == 14, [&] {
      return "ranks " + std::to_string(m1.rank) + ", " + std::to_string(m2.rank) + ", kernel " +
             std::to_string(m2.kernel.size());
    });
  });
  r.single("starphi0 contraction on 2-multivectors is bijective", "⋆φ̂2 : Λ²(TM) → Λ²(T*M) isomorphism", 3,
           [&]() -> Failure {
             const auto& m = ctx.msymp4().map(2);
             return unless(m.rank == 21 && m.injective() && m.surjective(), [&] { return std::to_string(m.rank); });
           });
  r.single("image of phi0 contraction lies in Omega^2_7", "⋆(φ∧(∂i⌟φ)) = 2 ∂i⌟φ, i = 1..7", 3, [&]() -> Failure {
    for (int i = 1; i <= 7; ++i) {
      Form beta = contract(e(7, i), ctx.phi());
      if (!(star_phi_wedge(ctx, beta) == Rational(2) * beta)) return "generator " + std::to_string(i);
    }
    return std::nullopt;
  });
  for (const auto& fact : theorem_identification_report(ctx)) {
    r.single("identification: " + fact.name, fact.name, 3,
             [&]() -> Failure { return unless(fact.holds, [&] { return fact.detail; }); });
  }
}

void metric_checks(Runner& r, const G2Context& ctx) {
  r.single("metric recovered from phi0", "(X⌟φ)∧(Y⌟φ)∧φ=6g(X,Y)Vol, g = Id", 4, [&]() -> Failure {
    MetricReport rep = recover_metric(ctx.phi());
    double worst = 0.0;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) worst = std::max(worst, std::fabs(rep.g[i][j] - (i == j ? 1.0 : 0.0)));
    }
    return unless(worst < 1e-12 && rep.residual < 1e-12, [&] {
      std::ostringstream os;
      os << "max |g − Id| = " << worst << ", residual " << rep.residual;
      return os.str();
    });
  });
  r.single("metric recovered from 8 phi0", "(X⌟φ)∧(Y⌟φ)∧φ=6g(X,Y)Vol for φ = 8φ0", 4, [&]() -> Failure {
    MetricReport rep = recover_metric(Rational(8) * ctx.phi());
    return unless(rep.residual < 1e-10 && std::fabs(rep.g[0][0] - 4.0) < 1e-10, [&] {
      std::ostringstream os;
      os << "residual " << rep.residual << ", g11 = " << rep.g[0][0];
      return os.str();
    });
  });
  r.single("decomposable 3-form is rejected", "det B ≤ 0 for dx123", 4, [&]() -> Failure {
    try {
      recover_metric(F("dx123"));
    } catch (const DegenerateFormError&) {
      return std::nullopt;
    }
    return "no error raised";
  });
}

void proposition_checks(Runner& r, const G2Context& ctx, std::size_t trials) {
  r.randomized("bracket-zero biconditional", "{α1,α2}=0 ⟺ L_{Q2}α1=0 when q1+q2=k+1", 5, trials,
               [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 const int q1 = s.integer(1, S.k());
                 const int q2 = S.degree() - q1;
                 HamiltonianPair p1 = s.hamiltonian_pair(S, q1);
                 HamiltonianPair p2 = s.hamiltonian_pair(S, q2);
                 BracketZeroCheck c = check_bracket_zero_prop(S, p1, p2);
                 return unless(c.agree, [&] { return pair_text(p1) + " " + pair_text(p2); });
               });
}

void kernel_shift_checks(Runner& r, const G2Context& ctx, std::size_t trials) {
  r.randomized("bracket independent of the Hamiltonian field", "{α1,α2} unchanged under Qi ↦ Qi + K, K⌟ω = 0", 6,
               trials, [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 const int kernel_grade = S.k();  // 2 for φ0, 3 for ⋆φ0: the grades with nonzero kernel.
                 HamiltonianPair shifted_side = s.hamiltonian_pair(S, kernel_grade);
                 HamiltonianPair other = s.hamiltonian_pair(S, 1);
                 MultiVector k = s.kernel_shift(S, kernel_grade, 2);
                 HamiltonianPair moved(S, shifted_side.q() + k, shifted_side.alpha());
                 const bool first = (t / 2) % 2 == 0;
                 Form before = first ? ham_bracket(S, shifted_side, other).form : ham_bracket(S, other, shifted_side).form;
                 Form after = first ? ham_bracket(S, moved, other).form : ham_bracket(S, other, moved).form;
                 return unless(!k.is_zero() && same_element(before, after),
                               [&] { return pair_text(shifted_side) + " " + pair_text(other) + " K=" + to_string(k); });
               });
}

// ---------------------------------------------------------------------------
// Supporting properties.

void supporting_checks(Runner& r, const G2Context& ctx, std::size_t trials) {
  const std::size_t half = std::max<std::size_t>(100, trials / 2);
  r.randomized("7 + 14 splitting of 2-forms", "π7(β)=(β+⋆(φ∧β))/3, π14(β)=(2β−⋆(φ∧β))/3", 0, half,
               [&](Sampler& s, std::size_t) {
                 Form beta = s.form(7, 2, 2, 3);
                 TwoFormSplit sp = split2(ctx, beta);
                 const bool ok = sp.beta7 + sp.beta14 == beta && pi7(ctx, sp.beta7) == sp.beta7 &&
                                 pi14(ctx, sp.beta14) == sp.beta14 && pi7(ctx, sp.beta14).is_zero() &&
                                 star_phi_wedge(ctx, sp.beta7) == Rational(2) * sp.beta7 &&
                                 star_phi_wedge(ctx, sp.beta14) == -sp.beta14;
                 return unless(ok, [&] { return "β=" + to_string(beta); });
               });
  r.randomized("inverse of starphi0 contraction", "β = (½β7♯ − β14♯)⌟⋆φ", 0, half, [&](Sampler& s, std::size_t) {
    Form beta = s.form(7, 2, 2, 3);
    MultiVector q = s.multivector(7, 2, 2, 3);
    const bool ok = contract(invert_starphi2(ctx, beta), ctx.star_phi()) == beta &&
                    invert_starphi2(ctx, contract(q, ctx.star_phi())) == q;
    return unless(ok, [&] { return "β=" + to_string(beta) + " Q=" + to_string(q); });
  });
  r.randomized("every 1-form is coRochesterian", "Ω¹_cR = Ω¹", 0, half, [&](Sampler& s, std::size_t) {
    Form alpha = s.form(7, 1, 3, 3);
    Classification c = classify_corochesterian(ctx, alpha);
    return unless(c.hamiltonian, [&] { return "α=" + to_string(alpha); });
  });
  r.randomized("Rochesterian 1-forms are coRochesterian", "Ω¹_R ⊂ Ω¹_cR", 0, half, [&](Sampler& s, std::size_t) {
    Form alpha = s.hamiltonian_pair(ctx.msymp3(), 1).alpha();
    Classification ro = classify_rochesterian(ctx, alpha);
    Classification co = classify_corochesterian(ctx, alpha);
    return unless(ro.hamiltonian && co.hamiltonian, [&] { return "α=" + to_string(alpha); });
  });
  r.randomized("cross product axioms", "g(X×Y,X)=0, |X×Y|²=|X|²|Y|²−g(X,Y)²", 0, half, [&](Sampler& s, std::size_t) {
    MultiVector x = s.constant_multivector(7, 1, 4);
    MultiVector y = s.constant_multivector(7, 1, 4);
    const Metric& g = ctx.metric();
    MultiVector z = cross(ctx, x, y);
    auto ip = [&](const MultiVector& a, const MultiVector& b) { return inner(g, flat(g, a), flat(g, b)); };
    const bool ok = ip(z, x).is_zero() && ip(z, y).is_zero() &&
                    ip(z, z) == ip(x, x) * ip(y, y) - ip(x, y) * ip(x, y);
    return unless(ok, [&] { return "X=" + to_string(x) + " Y=" + to_string(y); });
  });
  r.randomized("Hodge star defining property", "β∧⋆α = g(β,α)Vol", 0, half, [&](Sampler& s, std::size_t t) {
    const int l = static_cast<int>(t % 8);
    Metric g = t % 2 == 0 ? Metric::euclidean(7) : s.square_diagonal_metric(7);
    Form alpha = s.form(7, l, 1, 3);
    Form beta = s.form(7, l, 1, 3);
    const bool ok = wedge(beta, star(g, alpha)) == inner(g, beta, alpha) * g.volume() &&
                    inner(g, star(g, alpha), star(g, beta)) == inner(g, alpha, beta) &&
                    flat(g, sharp(g, alpha)) == alpha;
    return unless(ok, [&] { return "g=" + metric_text(g) + " α=" + to_string(alpha) + " β=" + to_string(beta); });
  });
  r.randomized("d squares to zero", "d∘d = 0", 0, half, [&](Sampler& s, std::size_t t) {
    Form alpha = s.form(7, static_cast<int>(t % 7), 3, 3);
    return unless(d(d(alpha)).is_zero(), [&] { return "α=" + to_string(alpha); });
  });
  r.randomized("bracket agrees with a Lie derivative up to an exact form",
               "{α1,α2} − (−1)^{q1+q2+1}L_{Q2}α1 = (−1)^{q1+1}d(Q2⌟α1)", 0, half, [&](Sampler& s, std::size_t t) {
                 const MsympStructure& S = pick_structure(ctx, t);
                 HamiltonianPair p1 = s.hamiltonian_pair(S, s.integer(1, S.k()));
                 HamiltonianPair p2 = s.hamiltonian_pair(S, s.integer(1, S.k() + 1 - p1.lie_degree()));
                 const int q1 = p1.lie_degree(), q2 = p2.lie_degree();
                 Form lhs = ham_bracket(S, p1, p2).form - sign_of(q1 + q2 + 1) * lie_derivative(p2.q(), p1.alpha());
                 Form rhs = sign_of(q1 + 1) * d(contract(p2.q(), p1.alpha()));
                 return unless(same_element(lhs, rhs), [&] { return pair_text(p1) + " " + pair_text(p2); });
               });
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const G2Context& ctx = shared_context();
  const std::size_t trials = options.trials;
  const std::size_t quarter = std::max<std::size_t>(50, trials / 4);
  Runner r(options);
  golden_checks(r, ctx);
  identity_checks(r, trials);
  schouten_checks(r, trials);
  bracket_checks(r, ctx, trials);
  norm_checks(r, ctx, trials);
  rank_checks(r, ctx);
  metric_checks(r, ctx);
  // Trials alternate between φ0 and ⋆φ0, so each structure gets `quarter` of them.
  proposition_checks(r, ctx, 2 * quarter);
  kernel_shift_checks(r, ctx, 2 * quarter);
  supporting_checks(r, ctx, trials);
  return r.take();
}

}  // namespace g2calc
