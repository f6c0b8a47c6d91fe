#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "g2calc/exterior.hpp"

namespace g2calc {

/// Syntax tree of an expression such as "x3*dx4^dx5 + contract(e6^e7, starphi0)".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' primary)*        ^INTEGER is a power, any other ^ is a wedge
///   primary := NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'
struct Expr {
  enum class Op { number, name, call, add, sub, neg, mul, div, wedge, power };

  Op op = Op::number;
  /// Identifier or function name; the literal text for numbers.
  std::string text;
  Rational number;
  std::vector<Expr> args;
  std::size_t position = 0;
};

/// Throws ParseError with the offset of the offending token.
Expr parse(std::string_view text);

/// A function (not yet typed as form or multivector), a form, or a multivector.
using Value = std::variant<Polynomial, Form, MultiVector>;

/// Names visible to evaluation. phi0, starphi0 and vol7 are bound automatically when dim = 7.
struct Environment {
  int dim = 7;
  std::map<std::string, Value> names;

  static Environment standard(int dim);
};

/// Grade and kind checking happens here. Unknown names raise ParseError; grade and
/// kind mismatches raise GradeError / KindError, both citing the source offset.
Value evaluate(const Expr& expr, const Environment& env);

Value evaluate(std::string_view text, const Environment& env);

/// Canonical text of a value; parse(render(v)) evaluates back to v.
std::string render(const Value& value);

/// A function becomes the grade-0 form (multivector); the other kind raises KindError.
Form as_form(const Value& value);
MultiVector as_multivector(const Value& value);

}  // namespace g2calc
