#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/msymp.hpp"

namespace g2calc {

/// Seeded source of small random exact objects. Identical seeds give identical
/// sequences on every platform (mt19937_64 plus our own integer mapping).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }

  /// Nonzero rational with numerator in ±1..4 and denominator in 1..3.
  Rational rational();
  /// Up to `terms` random monomials of total degree ≤ max_degree.
  Polynomial polynomial(int dim, int max_degree = 2, int terms = 2);
  Polynomial constant(int dim) { return Polynomial::constant(dim, rational()); }

  Form form(int dim, int grade, int max_degree = 2, int terms = 2);
  MultiVector multivector(int dim, int grade, int max_degree = 2, int terms = 2);
  Form constant_form(int dim, int grade, int terms = 3) { return form(dim, grade, 0, terms); }
  MultiVector constant_multivector(int dim, int grade, int terms = 3) { return multivector(dim, grade, 0, terms); }

  /// A diagonal metric with entries drawn from perfect squares, so √det g is rational.
  Metric square_diagonal_metric(int dim);

  /// Random pair (Q, α) with multivector grade q. When ω̂_q is surjective α is a
  /// random polynomial form and Q comes from the solver; otherwise Q is a constant
  /// plus (for q = 1) a linear symmetry of ω, α a primitive of Q⌟ω plus an exact term.
  HamiltonianPair hamiltonian_pair(const MsympStructure& s, int q, int max_degree = 2);

  /// Polynomial combination of kernel elements of ω̂_q; zero when the kernel is trivial.
  MultiVector kernel_shift(const MsympStructure& s, int q, int max_degree = 1);

  std::mt19937_64& engine() { return rng_; }

 private:
  template <class Kind>
  Graded<Kind> graded(int dim, int grade, int max_degree, int terms);

  std::mt19937_64 rng_;
};

}  // namespace g2calc
