#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcalg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad algebra definitions, bad expressions, unknown names.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  enum class Kind { Syntax, UnknownGenerator, BadExponent };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : ValidationError(message + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// An operation's mathematical precondition does not hold for its arguments
// (inhomogeneous input, element outside the base algebra, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InhomogeneousError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A derivation was applied to a polynomial mentioning a generator it has no
// image for.
class MissingImageError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace rcalg
