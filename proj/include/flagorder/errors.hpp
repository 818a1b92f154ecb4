#pragma once

#include <stdexcept>
#include <string>

namespace flagorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable lists.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

/// gcd(0, 0) requested.
class UndefinedGcdError : public Error {
 public:
  using Error::Error;
};

/// Group enumeration exceeded its cap (infinite group or cap too small).
class GroupTooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class WitnessesNotFoundError : public Error {
 public:
  using Error::Error;
};

/// Morphism data violates phi(w(a)) = psi(w)(phi(a)) or a homomorphism
/// relation.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// The target group is not the direct product required for spherical
/// restriction.
class DirectProductError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace flagorder
