#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pushkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// polyring
class TableMismatchError : public Error { using Error::Error; };
class UnboundVariableError : public Error { using Error::Error; };
class GradingError : public Error { using Error::Error; };
class NotDivisibleError : public Error { using Error::Error; };
class NotInvertibleError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };

// symfun / localization
class SymmetryError : public Error { using Error::Error; };

/// A fixed-point sum failed to be a polynomial. This is never caused by user
/// input; it means an internal invariant is broken.
class IntegralityError : public Error { using Error::Error; };

// gysin / front end
class ArityError : public Error { using Error::Error; };
class UnsupportedVariableError : public Error { using Error::Error; };

/// Diagnostic from the expression front end, carrying the byte offset of the
/// offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string &what)
      : Error("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class ExponentError : public ParseError { using ParseError::ParseError; };

/// Arity violation found while parsing (e.g. q4 at rank 3).
class ParseArityError : public ParseError { using ParseError::ParseError; };

} // namespace pushkit
