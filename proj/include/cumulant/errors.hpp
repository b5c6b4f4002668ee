#pragma once

#include <stdexcept>
#include <string>

namespace cumulant {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document does not conform to its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Structure constants or map data violate an algebraic axiom.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string witness)
      : Error(message), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// Operands live over different presentations, or an index/weight is out of range.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace cumulant
