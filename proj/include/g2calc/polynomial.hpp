#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "g2calc/rational.hpp"

namespace g2calc {

/// Largest supported ambient dimension (number of coordinates x1..xn).
inline constexpr int kMaxDim = 16;

/// Exponent vector of a monomial. Entries past the ambient dimension stay zero.
using Exponent = std::array<std::uint16_t, kMaxDim>;

int total_degree(const Exponent& e);

/// Graded-lexicographic order: lower total degree first, then x1 before x2
/// (so x1^2 < x1*x2 < x2^2 within a degree).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the rationals in x1..xn.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty map
/// and structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLex>;

  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  /// x^axis with axis in 1..nvars.
  static Polynomial variable(int nvars, int axis);
  static Polynomial monomial(int nvars, const Exponent& e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  /// Highest total degree among the stored terms; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

 private:
  int nvars_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Formal derivative with respect to x^axis, axis in 1..nvars.
Polynomial partial(const Polynomial& p, int axis);

/// Exact evaluation at a point of length nvars.
Rational eval(const Polynomial& p, std::span<const Rational> point);

/// Canonical text, e.g. "2 + 3*x1*x2^2"; the zero polynomial renders as "0".
std::string to_string(const Polynomial& p);

}  // namespace g2calc
