#include "g2calc/sample.hpp"

#include "g2calc/errors.hpp"

namespace g2calc {

int Sampler::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::rational() {
  int num = integer(1, 4) * (coin() ? 1 : -1);
  Rational r(num, integer(1, 3));
  r.canonicalize();
  return r;
}

Polynomial Sampler::polynomial(int dim, int max_degree, int terms) {
  Polynomial p(dim);
  const int count = integer(1, terms);
  for (int t = 0; t < count; ++t) {
    Exponent e{};
    const int degree = integer(0, max_degree);
    for (int i = 0; i < degree; ++i) ++e[integer(0, dim - 1)];
    p.add_term(e, rational());
  }
  return p;
}

template <class Kind>
Graded<Kind> Sampler::graded(int dim, int grade, int max_degree, int terms) {
  Graded<Kind> out(dim, grade);
  if (grade < 0 || grade > dim) return out;
  const auto basis = all_multi_indices(dim, grade);
  const int count = integer(1, terms);
  for (int t = 0; t < count; ++t) {
    MultiIndex index = basis[integer(0, static_cast<int>(basis.size()) - 1)];
    out.add_term(index, polynomial(dim, max_degree, 2));
  }
  return out;
}

Form Sampler::form(int dim, int grade, int max_degree, int terms) {
  return graded<FormKind>(dim, grade, max_degree, terms);
}

MultiVector Sampler::multivector(int dim, int grade, int max_degree, int terms) {
  return graded<VectorKind>(dim, grade, max_degree, terms);
}

Metric Sampler::square_diagonal_metric(int dim) {
  std::vector<Rational> entries;
  for (int i = 0; i < dim; ++i) {
    Rational root(integer(1, 3), integer(1, 2));
    root.canonicalize();
    entries.push_back(root * root);
  }
  return Metric::diagonal(entries);
}

HamiltonianPair Sampler::hamiltonian_pair(const MsympStructure& s, int q, int max_degree) {
  const int n = s.dim();
  const int l = s.k() - q;
  if (q < 1 || q > s.k()) throw GradeError("Hamiltonian pairs need multivector grade 1..k");
  const ContractionMap& map = s.map(q);
  if (map.surjective()) {
    Form alpha = form(n, l, max_degree + 1, 3);
    return g2calc::hamiltonian_pair(s, alpha);
  }
  MultiVector field = constant_multivector(n, q, 2);
  if (q == 1) {
    const auto& symmetries = s.linear_symmetries();
    if (!symmetries.empty()) {
      const int picks = integer(0, 2);
      for (int i = 0; i < picks; ++i) {
        field += rational() * symmetries[integer(0, static_cast<int>(symmetries.size()) - 1)];
      }
    }
  }
  Form alpha = antiderivative(contract(field, s.omega()));
  if (l >= 1) alpha += d(form(n, l - 1, max_degree + 1, 2));
  return HamiltonianPair(s, std::move(field), std::move(alpha));
}

MultiVector Sampler::kernel_shift(const MsympStructure& s, int q, int max_degree) {
  MultiVector out(s.dim(), q);
  const auto& kernel = s.map(q).kernel;
  if (kernel.empty()) return out;
  const int count = integer(1, 3);
  for (int i = 0; i < count; ++i) {
    out += polynomial(s.dim(), max_degree, 2) * kernel[integer(0, static_cast<int>(kernel.size()) - 1)];
  }
  return out;
}

}  // namespace g2calc
