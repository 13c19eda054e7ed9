#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gqm {

enum class ErrorKind {
  InvalidPrime,
  InvalidDegree,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  InvalidArgs,
  InvalidField,
  ZeroVector,
  BadIndex,
  BadBasis,
  OutcomeNotInObservable,
  DegenerateObservable,
  BadObservable,
  DegenerateSinglet,
  TooLarge,
  BadTable,
  AdditionForbidden,
  ShapeMismatch,
  InternalInvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind, so callers (and tests) can branch on the kind instead of parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gqm
