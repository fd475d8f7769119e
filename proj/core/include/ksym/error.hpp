#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ksym {

enum class ErrorCode {
  AmbientMismatch,
  ShapeMismatch,
  IndexOutOfRange,
  NotSkew,
  DegenerateCommonKernel,
  BadDimension,
  MismatchedK,
  NotIsotropic,
  InvariantBroken,
  PreconditionFailed,
  ConstructionIncomplete,
  NotPolarized,
  ComplementFailed,
  SingularPhi,
  NotIsomorphism,
  NotClosed,
  VariableMismatch,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every error the library raises. Parse errors are distinguished from
// domain errors by their code only.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::Parse, message) {}
};

}  // namespace ksym
