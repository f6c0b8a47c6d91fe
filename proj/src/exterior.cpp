#include "g2calc/exterior.hpp"

#include <sstream>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

template <class Kind>
void check_dims(const Graded<Kind>& a, const Graded<Kind>& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(Kind::name) + "s on R^" + std::to_string(a.dim()) + " and R^" +
                         std::to_string(b.dim()));
  }
}

}  // namespace

template <class Kind>
Graded<Kind>::Graded(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || dim > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(dim) + " outside 0.." + std::to_string(kMaxDim));
  }
}

template <class Kind>
Graded<Kind> Graded<Kind>::basis(int dim, MultiIndex index, const Rational& c) {
  return term(index, Polynomial::constant(dim, c));
}

template <class Kind>
Graded<Kind> Graded<Kind>::term(MultiIndex index, const Polynomial& f) {
  Graded out(f.nvars(), index.grade());
  out.add_term(index, f);
  return out;
}

template <class Kind>
Graded<Kind> Graded<Kind>::scalar(const Polynomial& f) {
  return term(MultiIndex{}, f);
}

template <class Kind>
bool Graded<Kind>::is_constant() const {
  for (const auto& [index, f] : terms_) {
    if (!f.is_constant()) return false;
  }
  return true;
}

template <class Kind>
Polynomial Graded<Kind>::coefficient(MultiIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Polynomial(dim_) : it->second;
}

template <class Kind>
Polynomial Graded<Kind>::as_scalar() const {
  if (grade_ != 0) throw GradeError(std::string("expected a grade-0 ") + Kind::name);
  return coefficient(MultiIndex{});
}

template <class Kind>
void Graded<Kind>::add_term(MultiIndex index, const Polynomial& f) {
  if (f.nvars() != dim_) throw DimensionError("coefficient variable count does not match dimension");
  if (index.grade() != grade_) {
    throw GradeError("basis index of grade " + std::to_string(index.grade()) + " in a grade-" +
                     std::to_string(grade_) + " " + Kind::name);
  }
  if (index.max_axis() > dim_) throw DimensionError("basis index exceeds dimension");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator+=(const Graded& other) {
  check_dims(*this, other);
  if (other.is_zero()) return *this;
  if (is_zero() && grade_ != other.grade_ && !in_range()) grade_ = other.grade_;
  if (grade_ != other.grade_) {
    throw GradeError(std::string("adding ") + Kind::name + "s of grade " + std::to_string(grade_) + " and " +
                     std::to_string(other.grade_));
  }
  for (const auto& [index, f] : other.terms_) add_term(index, f);
  return *this;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator-=(const Graded& other) {
  return *this += -other;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, f] : terms_) f *= c;
  return *this;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator*=(const Polynomial& f) {
  if (f.nvars() != dim_) throw DimensionError("scalar factor variable count does not match dimension");
  TermMap scaled;
  for (auto& [index, coeff] : terms_) {
    Polynomial product = coeff * f;
    if (!product.is_zero()) scaled.emplace(index, std::move(product));
  }
  terms_ = std::move(scaled);
  return *this;
}

template class Graded<FormKind>;
template class Graded<VectorKind>;

template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b) {
  check_dims(a, b);
  Graded<Kind> out(a.dim(), a.grade() + b.grade());
  if (!out.in_range()) return out;
  for (const auto& [ia, fa] : a.terms()) {
    for (const auto& [ib, fb] : b.terms()) {
      int sign = merge_sign(ia, ib);
      if (sign == 0) continue;
      Polynomial product = fa * fb;
      if (sign < 0) product *= Rational(-1);
      out.add_term(ia | ib, product);
    }
  }
  return out;
}

template Form wedge(const Form&, const Form&);
template MultiVector wedge(const MultiVector&, const MultiVector&);

Form contract(const MultiVector& q, const Form& alpha) {
  if (q.dim() != alpha.dim()) {
    throw DimensionError("contracting a multivector on R^" + std::to_string(q.dim()) + " into a form on R^" +
                         std::to_string(alpha.dim()));
  }
  Form out(alpha.dim(), alpha.grade() - q.grade());
  if (!out.in_range()) return out;
  for (const auto& [iq, fq] : q.terms()) {
    for (const auto& [ia, fa] : alpha.terms()) {
      if (!iq.subset_of(ia)) continue;
      MultiIndex rest = ia.minus(iq);
      Polynomial product = fq * fa;
      if (merge_sign(iq, rest) < 0) product *= Rational(-1);
      out.add_term(rest, product);
    }
  }
  return out;
}

Form d(const Form& alpha) {
  Form out(alpha.dim(), alpha.grade() + 1);
  if (!out.in_range()) return out;
  for (const auto& [index, f] : alpha.terms()) {
    for (int axis = 1; axis <= alpha.dim(); ++axis) {
      if (index.contains(axis)) continue;
      Polynomial df = partial(f, axis);
      if (df.is_zero()) continue;
      MultiIndex single = MultiIndex::from_bits(1u << (axis - 1));
      if (merge_sign(single, index) < 0) df *= Rational(-1);
      out.add_term(single | index, df);
    }
  }
  return out;
}

template <class Kind>
Graded<Kind> eval_at(const Graded<Kind>& a, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != a.dim()) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(a.dim()));
  }
  Graded<Kind> out(a.dim(), a.grade());
  for (const auto& [index, f] : a.terms()) {
    out.add_term(index, Polynomial::constant(a.dim(), eval(f, point)));
  }
  return out;
}

template Form eval_at(const Form&, std::span<const Rational>);
template MultiVector eval_at(const MultiVector&, std::span<const Rational>);

Polynomial apply(const MultiVector& x, const Polynomial& f) {
  if (x.grade() != 1) throw GradeError("directional derivative needs a vector field");
  if (x.dim() != f.nvars()) throw DimensionError("vector field and function dimensions differ");
  Polynomial out(f.nvars());
  for (const auto& [index, coeff] : x.terms()) {
    out += coeff * partial(f, index.max_axis());
  }
  return out;
}

Form antiderivative(const Form& alpha) {
  const int n = alpha.dim();
  Form out(n, alpha.grade() - 1);
  if (alpha.grade() < 1 || !alpha.in_range()) return out;
  for (const auto& [index, f] : alpha.terms()) {
    const int p = index.grade();
    for (const auto& [exponent, c] : f.terms()) {
      const int m = total_degree(exponent);
      Polynomial mono = Polynomial::monomial(n, exponent, c / Rational(m + p));
      // E⌟(mono dx_J) = Σ_k (-1)^(k-1) x^{j_k} mono dx_{J∖j_k}
      for (int axis : index.axes()) {
        MultiIndex single = MultiIndex::from_bits(1u << (axis - 1));
        MultiIndex rest = index.minus(single);
        Polynomial coeff = mono * Polynomial::variable(n, axis);
        if (merge_sign(single, rest) < 0) coeff *= Rational(-1);
        out.add_term(rest, coeff);
      }
    }
  }
  return out;
}

Form dx(int dim, int axis) {
  if (axis < 1 || axis > dim) throw GradeError("dx" + std::to_string(axis) + " outside R^" + std::to_string(dim));
  return Form::basis(dim, MultiIndex{axis});
}

MultiVector e(int dim, int axis) {
  if (axis < 1 || axis > dim) throw GradeError("e" + std::to_string(axis) + " outside R^" + std::to_string(dim));
  return MultiVector::basis(dim, MultiIndex{axis});
}

namespace {

std::string form_basis_text(MultiIndex index, int dim) {
  if (index.empty()) return "";
  if (dim <= 9) return "dx" + index_label(index);
  std::string out;
  for (int a : index.axes()) {
    if (!out.empty()) out += '^';
    out += "dx" + std::to_string(a);
  }
  return out;
}

std::string vector_basis_text(MultiIndex index, int) {
  std::string out;
  for (int a : index.axes()) {
    if (!out.empty()) out += '^';
    out += "e" + std::to_string(a);
  }
  return out;
}

template <class Kind, class BasisText>
std::string render(const Graded<Kind>& a, BasisText basis_text) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, f] : a.terms()) {
    std::string basis = basis_text(index, a.dim());
    bool negative = false;
    std::string coeff;
    if (f.terms().size() == 1) {
      const auto& [exponent, c] = *f.terms().begin();
      negative = sgn(c) < 0;
      coeff = to_string(Polynomial::monomial(a.dim(), exponent, abs(c)));
      if (coeff == "1" && !basis.empty()) coeff.clear();
    } else {
      coeff = "(" + to_string(f) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (basis.empty()) {
      os << coeff;
    } else if (coeff.empty()) {
      os << basis;
    } else {
      os << coeff << '*' << basis;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const Form& a) { return render(a, form_basis_text); }

std::string to_string(const MultiVector& a) { return render(a, vector_basis_text); }

}  // namespace g2calc
