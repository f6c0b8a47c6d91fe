#include "g2calc/msymp.hpp"

#include "g2calc/errors.hpp"
#include "g2calc/schouten.hpp"

namespace g2calc {

namespace {

int parity_sign(long long exponent) { return (((exponent % 2) + 2) % 2) == 0 ? 1 : -1; }

ContractionMap make_map(const Form& omega, int j) {
  const int n = omega.dim();
  ContractionMap map;
  map.source_grade = j;
  map.source_basis = all_multi_indices(n, j);
  map.target_basis = all_multi_indices(n, omega.grade() - j);
  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t r = 0; r < map.target_basis.size(); ++r) row_of[map.target_basis[r]] = r;
  map.matrix = RationalMatrix(map.target_basis.size(), map.source_basis.size());
  for (std::size_t c = 0; c < map.source_basis.size(); ++c) {
    Form image = contract(MultiVector::basis(n, map.source_basis[c]), omega);
    for (const auto& [index, f] : image.terms()) map.matrix(row_of.at(index), c) = f.constant_term();
  }
  map.rank = rank(map.matrix);
  for (const auto& v : nullspace(map.matrix)) map.kernel.push_back(from_coordinates(map, n, v));
  return map;
}

std::vector<MultiVector> symmetry_algebra(const Form& omega) {
  const int n = omega.dim();
  const auto rows = all_multi_indices(n, omega.grade());
  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  // Column (i, j) holds d(x^j ∂_i ⌟ ω) = dx^j ∧ (∂_i⌟ω).
  RationalMatrix m(rows.size(), static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    Form inner = contract(e(n, i), omega);
    for (int j = 1; j <= n; ++j) {
      Form image = wedge(dx(n, j), inner);
      for (const auto& [index, f] : image.terms()) {
        m(row_of.at(index), static_cast<std::size_t>((i - 1) * n + (j - 1))) = f.constant_term();
      }
    }
  }
  std::vector<MultiVector> out;
  for (const auto& v : nullspace(m)) {
    MultiVector field(n, 1);
    for (int i = 1; i <= n; ++i) {
      Polynomial coeff(n);
      for (int j = 1; j <= n; ++j) coeff += Polynomial::variable(n, j) * v[(i - 1) * n + (j - 1)];
      field.add_term(MultiIndex{i}, coeff);
    }
    out.push_back(std::move(field));
  }
  return out;
}

void check_structure_dim(const MsympStructure& s, int dim) {
  if (s.dim() != dim) throw DimensionError("object dimension differs from the multisymplectic structure");
}

void check_pair(const MsympStructure& s, const HamiltonianPair& p) {
  if (!(p.omega() == s.omega())) throw InvalidPairError("Hamiltonian pair was validated against a different form");
}

}  // namespace

RationalVector to_coordinates(const ContractionMap& map, const MultiVector& q) {
  if (q.grade() != map.source_grade) throw GradeError("multivector grade does not match the contraction map");
  RationalVector x(map.source_basis.size());
  for (std::size_t c = 0; c < map.source_basis.size(); ++c) {
    x[c] = q.coefficient(map.source_basis[c]).constant_term();
  }
  return x;
}

MultiVector from_coordinates(const ContractionMap& map, int dim, const RationalVector& x) {
  MultiVector q(dim, map.source_grade);
  for (std::size_t c = 0; c < map.source_basis.size(); ++c) {
    if (sgn(x[c]) != 0) q.add_term(map.source_basis[c], Polynomial::constant(dim, x[c]));
  }
  return q;
}

MsympStructure MsympStructure::build(const Form& omega) {
  if (omega.grade() < 2 || omega.grade() > omega.dim()) {
    throw GradeError("a multisymplectic form needs grade between 2 and n");
  }
  if (!omega.is_constant()) throw UnsupportedError("only constant-coefficient structure forms are supported");
  if (!d(omega).is_zero()) throw DegenerateFormError("structure form is not closed");
  MsympStructure s(omega);
  for (int j = 1; j <= s.k(); ++j) s.maps_.push_back(make_map(omega, j));
  if (!s.maps_.front().injective()) {
    throw DegenerateFormError("degenerate form: " + to_string(s.maps_.front().kernel.front()) +
                              " contracts it to zero");
  }
  s.symmetries_ = symmetry_algebra(omega);
  return s;
}

const ContractionMap& MsympStructure::map(int j) const {
  if (j < 1 || j > k()) throw GradeError("contraction map index " + std::to_string(j) + " outside 1.." +
                                         std::to_string(k()));
  return maps_[j - 1];
}

bool is_locally_hamiltonian(const MsympStructure& s, const MultiVector& q) {
  check_structure_dim(s, q.dim());
  if (q.grade() < 1 || q.grade() > s.k()) {
    throw GradeError("locally Hamiltonian multivectors have grade 1.." + std::to_string(s.k()));
  }
  return d(contract(q, s.omega())).is_zero();
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::none:
      return "none";
    case SolveStatus::unique:
      return "unique";
    case SolveStatus::underdetermined:
      return "underdetermined";
  }
  return "unknown";
}

SolveResult solve_hamiltonian(const MsympStructure& s, const Form& alpha) {
  check_structure_dim(s, alpha.dim());
  const int l = alpha.grade();
  if (l < 0 || l > s.k() - 1) {
    throw GradeError("Hamiltonian forms have grade 0.." + std::to_string(s.k() - 1));
  }
  const int n = s.dim();
  const ContractionMap& map = s.map(s.k() - l);
  SolveResult result{SolveStatus::none, MultiVector(n, map.source_grade), map.kernel};

  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t r = 0; r < map.target_basis.size(); ++r) row_of[map.target_basis[r]] = r;
  std::map<Exponent, RationalVector, GradedLex> rhs_by_monomial;
  const Form tau = d(alpha);
  for (const auto& [index, f] : tau.terms()) {
    for (const auto& [exponent, c] : f.terms()) {
      auto& column = rhs_by_monomial[exponent];
      column.resize(map.target_basis.size());
      column[row_of.at(index)] = c;
    }
  }
  MultiVector q(n, map.source_grade);
  for (const auto& [exponent, rhs] : rhs_by_monomial) {
    auto x = solve_min_norm(map.matrix, rhs);
    if (!x) return result;
    q += Polynomial::monomial(n, exponent, Rational(1)) * from_coordinates(map, n, *x);
  }
  result.particular = std::move(q);
  result.status = map.kernel.empty() ? SolveStatus::unique : SolveStatus::underdetermined;
  return result;
}

HamiltonianPair::HamiltonianPair(const MsympStructure& s, MultiVector q, Form alpha)
    : q_(std::move(q)), alpha_(std::move(alpha)), omega_(s.omega()) {
  check_structure_dim(s, q_.dim());
  check_structure_dim(s, alpha_.dim());
  if (q_.grade() < 1 || q_.grade() > s.k() || alpha_.grade() != s.k() - q_.grade()) {
    throw InvalidPairError("a Hamiltonian pair needs grades q + l = k with 1 <= q <= k");
  }
  if (!(contract(q_, omega_) == d(alpha_))) throw InvalidPairError("Q⌟ω differs from dα");
}

HamiltonianPair hamiltonian_pair(const MsympStructure& s, const Form& alpha) {
  SolveResult solved = solve_hamiltonian(s, alpha);
  if (solved.status == SolveStatus::none) throw InvalidPairError("form is not Hamiltonian: " + to_string(alpha));
  return HamiltonianPair(s, std::move(solved.particular), alpha);
}

BracketValue ham_bracket(const MsympStructure& s, const HamiltonianPair& p1, const HamiltonianPair& p2) {
  check_pair(s, p1);
  check_pair(s, p2);
  const int q1 = p1.lie_degree();
  const int q2 = p2.lie_degree();
  BracketValue out{Form(s.dim(), s.degree() - q1 - q2), q1 + q2 - 1, s.degree() - q1 - q2};
  if (q1 + q2 > s.degree()) return out;
  out.form = contract(wedge(p1.q(), p2.q()), s.omega());
  out.form *= Rational(parity_sign(q1 + q2 + 1));
  return out;
}

bool bracket_exterior_derivative_check(const MsympStructure& s, const HamiltonianPair& p1,
                                       const HamiltonianPair& p2) {
  Form lhs = d(ham_bracket(s, p1, p2).form);
  Form rhs = contract(schouten(p1.q(), p2.q()), s.omega());
  return same_element(lhs, rhs);
}

namespace {

/// s · {α_a, {α_b, α_c}}, or nullopt-equivalent status when the inner bracket has no field.
bool nested_bracket(const MsympStructure& s, const HamiltonianPair& a, const HamiltonianPair& b,
                    const HamiltonianPair& c, Form& out, std::string& status) {
  BracketValue inner = ham_bracket(s, b, c);
  out = Form(s.dim(), s.degree() - a.lie_degree() - inner.lie_degree);
  if (inner.tensor_degree < 0) return true;
  SolveResult solved = solve_hamiltonian(s, inner.form);
  if (solved.status == SolveStatus::none) {
    status = "inner bracket " + to_string(inner.form) + " has no Hamiltonian multivector field";
    return false;
  }
  HamiltonianPair inner_pair(s, std::move(solved.particular), inner.form);
  out = ham_bracket(s, a, inner_pair).form;
  return true;
}

}  // namespace

JacobiDefect jacobi_defect(const MsympStructure& s, const HamiltonianPair& p1, const HamiltonianPair& p2,
                           const HamiltonianPair& p3) {
  check_pair(s, p1);
  check_pair(s, p2);
  check_pair(s, p3);
  const long long q1 = p1.lie_degree();
  const long long q2 = p2.lie_degree();
  const long long q3 = p3.lie_degree();
  const int n = s.dim();
  JacobiDefect out{Form(n, 0), Form(n, 0), Form(n, 0), false, true, "ok"};

  Form t1(n, 0), t2(n, 0), t3(n, 0);
  if (!nested_bracket(s, p1, p2, p3, t1, out.status) || !nested_bracket(s, p2, p3, p1, t2, out.status) ||
      !nested_bracket(s, p3, p1, p2, t3, out.status)) {
    out.solvable = false;
    return out;
  }
  out.lhs = parity_sign(q1 * (q3 - 1)) * t1;
  out.lhs += parity_sign(q2 * (q1 - 1)) * t2;
  out.lhs += parity_sign(q3 * (q2 - 1)) * t3;

  out.primitive = contract(p1.q(), contract(p2.q(), d(p3.alpha())));
  out.primitive *= Rational(parity_sign(q3 * q2 + q1 * q2 + 1));
  out.rhs = d(out.primitive);
  out.equal = same_element(out.lhs, out.rhs);
  return out;
}

BracketZeroCheck check_bracket_zero_prop(const MsympStructure& s, const HamiltonianPair& p1,
                                         const HamiltonianPair& p2) {
  if (p1.lie_degree() + p2.lie_degree() != s.degree()) {
    throw GradeError("the bracket-zero criterion needs q1 + q2 = k + 1");
  }
  BracketZeroCheck out;
  out.bracket_zero = ham_bracket(s, p1, p2).form.is_zero();
  out.lie_zero = lie_derivative(p2.q(), p1.alpha()).is_zero();
  out.lie_zero_swapped = lie_derivative(p1.q(), p2.alpha()).is_zero();
  out.agree = out.bracket_zero == out.lie_zero && out.lie_zero == out.lie_zero_swapped;
  return out;
}

bool quotient_equal(const Form& a, const Form& b) {
  Form diff = a;
  diff -= b;
  return d(diff).is_zero();
}

}  // namespace g2calc
