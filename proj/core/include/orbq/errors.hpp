#pragma once

#include <stdexcept>
#include <string>

namespace orbq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON shape, unparsable rational, missing field.
class SchemaError : public Error {
 public:
  SchemaError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

// Mathematical validation failures. These carry a witness where one exists.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string witness = {})
      : Error(message), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class NotOrthogonal : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GroupTooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvarianceViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotFoliated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidIsometry : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OrderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoInvariantQuantization : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace orbq
