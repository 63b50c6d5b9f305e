#pragma once

#include <stdexcept>
#include <string>

namespace tropcay {

// Exit-code families used by the command line front end.
enum class ErrorKind {
  Schema = 2,
  Unsupported = 3,
  Precondition = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(ErrorKind::Schema, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::Unsupported, what) {}
};

// Mathematical precondition failures. The subclasses only exist so that
// callers and tests can tell the failure modes apart.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class OrientationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UndefinedProductError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptySupportError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptyCellError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InfeasibleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonTransversalCellError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class AdmissibilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace tropcay
