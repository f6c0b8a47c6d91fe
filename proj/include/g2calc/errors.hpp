#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2calc {

/// Operands live in spaces of different dimension (or a point has the wrong length).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grade or axis index is outside the range an operation accepts.
class GradeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A form was combined with a multivector where only one kind is allowed.
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but outside what the library handles
/// (non-constant structure forms, indefinite metrics, irrational volume factors).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A candidate structure form fails nondegeneracy, or a 3-form is not generic.
class DegenerateFormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Hamiltonian pair whose multivector does not satisfy Q⌟ω = dα.
class InvalidPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace g2calc
