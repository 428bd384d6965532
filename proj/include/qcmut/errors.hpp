#pragma once

#include <stdexcept>
#include <string>

namespace qcmut {

// Base class for all library errors. `code()` is a stable machine-readable
// name of the violated invariant (e.g. "NotSymmetric"); `what()` is the
// human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Input failed a domain-type invariant (NotSymmetric, OddDiagonal, NotSkew,
// DimensionMismatch, IndexOutOfRange, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An internal cross-check failed. Signals an implementation bug, never
// invalid input.
class InternalInconsistency : public Error {
public:
  explicit InternalInconsistency(const std::string& message)
      : Error("InternalInconsistency", message) {}
};

}  // namespace qcmut
