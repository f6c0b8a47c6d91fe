#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/linalg.hpp"

namespace g2calc {

/// Matrix of Q ↦ Q⌟ω from grade-j multivectors to grade-(k+1−j) forms,
/// in the standard bases (columns: ∂_I, rows: dx_J, both in MultiIndex order).
struct ContractionMap {
  int source_grade = 0;
  std::vector<MultiIndex> source_basis;
  std::vector<MultiIndex> target_basis;
  RationalMatrix matrix;
  std::size_t rank = 0;
  /// Constant multivectors spanning the kernel.
  std::vector<MultiVector> kernel;

  bool injective() const { return rank == source_basis.size(); }
  bool surjective() const { return rank == target_basis.size(); }
};

/// Constant-coefficient multisymplectic form ω of degree k+1 on R^n with the
/// contraction matrices for every j = 1..k cached at construction.
class MsympStructure {
 public:
  /// Throws UnsupportedError for non-constant ω, GradeError for grade < 2 or > n,
  /// and DegenerateFormError when some nonzero vector X has X⌟ω = 0.
  static MsympStructure build(const Form& omega);

  const Form& omega() const { return omega_; }
  int dim() const { return omega_.dim(); }
  /// Degree k+1 of ω.
  int degree() const { return omega_.grade(); }
  int k() const { return omega_.grade() - 1; }

  /// The map for multivectors of grade j, 1 ≤ j ≤ k.
  const ContractionMap& map(int j) const;

  /// Linear vector fields x ↦ A x with L_{Ax} ω = 0 (a basis of the linear symmetry algebra).
  const std::vector<MultiVector>& linear_symmetries() const { return symmetries_; }

 private:
  explicit MsympStructure(Form omega) : omega_(std::move(omega)) {}

  Form omega_;
  std::vector<ContractionMap> maps_;
  std::vector<MultiVector> symmetries_;
};

/// Q of grade k−l (0 ≤ l ≤ k−1) is locally Hamiltonian when d(Q⌟ω) = 0.
bool is_locally_hamiltonian(const MsympStructure& s, const MultiVector& q);

enum class SolveStatus { none, unique, underdetermined };

std::string to_string(SolveStatus status);

/// Solutions Q of Q⌟ω = dα. The equation is solved monomial by monomial of dα;
/// `particular` is the representative orthogonal to the kernel in each
/// monomial's coefficient space, and every other solution differs from it by
/// polynomial combinations of `kernel_basis`.
struct SolveResult {
  SolveStatus status = SolveStatus::none;
  MultiVector particular;
  std::vector<MultiVector> kernel_basis;
};

/// α of grade l with 0 ≤ l ≤ k−1; GradeError otherwise. Inconsistency is reported
/// as status none, never thrown.
SolveResult solve_hamiltonian(const MsympStructure& s, const Form& alpha);

/// (Q, α) with Q⌟ω = dα, checked at construction against a structure.
class HamiltonianPair {
 public:
  /// Throws InvalidPairError when Q⌟ω ≠ dα or the grades do not add up to k.
  HamiltonianPair(const MsympStructure& s, MultiVector q, Form alpha);

  const MultiVector& q() const { return q_; }
  const Form& alpha() const { return alpha_; }
  /// Multivector grade, which is also the Lie degree k − l of α.
  int lie_degree() const { return q_.grade(); }
  const Form& omega() const { return omega_; }

 private:
  MultiVector q_;
  Form alpha_;
  Form omega_;
};

/// Builds the pair for α from the solver's particular solution; nullopt-like
/// failure is reported by throwing InvalidPairError when α is not Hamiltonian.
HamiltonianPair hamiltonian_pair(const MsympStructure& s, const Form& alpha);

struct BracketValue {
  Form form;
  /// q1 + q2 − 1.
  int lie_degree = 0;
  /// k + 1 − q1 − q2 (negative grades carry the zero form).
  int tensor_degree = 0;
};

/// {α1, α2} = (−1)^{q1+q2+1} (Q1∧Q2)⌟ω, and 0 when q1 + q2 > k + 1.
BracketValue ham_bracket(const MsympStructure& s, const HamiltonianPair& p1, const HamiltonianPair& p2);

/// Compares d{α1, α2} with [Q1, Q2]⌟ω exactly.
bool bracket_exterior_derivative_check(const MsympStructure& s, const HamiltonianPair& p1,
                                       const HamiltonianPair& p2);

struct JacobiDefect {
  Form lhs;
  Form rhs;
  /// rhs = d(primitive), so the defect is exact.
  Form primitive;
  bool equal = false;
  /// False when an inner bracket could not be paired with a Hamiltonian field.
  bool solvable = true;
  std::string status;
};

/// lhs = (−1)^{q1(q3−1)}{α1,{α2,α3}} + (−1)^{q2(q1−1)}{α2,{α3,α1}} + (−1)^{q3(q2−1)}{α3,{α1,α2}},
/// with inner brackets paired to solver-produced fields;
/// rhs = (−1)^{q3 q2 + q1 q2 + 1} d(Q1⌟(Q2⌟dα3)). Expanding L_{Q1}(Q2⌟dα3) produces
/// d(Q1⌟Q2⌟dα3); the variant d(Q1⌟d(Q2⌟dα3)) sits one grade above the lhs.
JacobiDefect jacobi_defect(const MsympStructure& s, const HamiltonianPair& p1, const HamiltonianPair& p2,
                           const HamiltonianPair& p3);

struct BracketZeroCheck {
  bool bracket_zero = false;
  bool lie_zero = false;
  /// L_{Q1} α2 = 0, the symmetric formulation.
  bool lie_zero_swapped = false;
  bool agree = false;
};

/// For q1 + q2 = k + 1: {α1, α2} = 0 ⟺ L_{Q2} α1 = 0 ⟺ L_{Q1} α2 = 0.
/// GradeError when q1 + q2 ≠ k + 1.
BracketZeroCheck check_bracket_zero_prop(const MsympStructure& s, const HamiltonianPair& p1,
                                         const HamiltonianPair& p2);

/// Hamiltonian forms are compared modulo closed forms: a ~ b iff d(a − b) = 0.
bool quotient_equal(const Form& a, const Form& b);

/// Column vector of a constant multivector in the map's source basis, and back.
RationalVector to_coordinates(const ContractionMap& map, const MultiVector& q);
MultiVector from_coordinates(const ContractionMap& map, int dim, const RationalVector& x);

}  // namespace g2calc
