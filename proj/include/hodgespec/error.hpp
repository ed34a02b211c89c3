#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgespec {

/// Machine-readable failure categories. Every library error carries one.
enum class ErrorKind {
  InvalidArgument,
  ParseError,
  UnitMismatch,
  NonpositiveScalar,
  EmptySpectrum,
  CutoffExceeded,
  DimensionMismatch,
  DegreeZero,
  DegreeOutOfRange,
  ZeroCovector,
  SingularBasis,
  NotPositiveDefinite,
  BoxTooLarge,
  BudgetExceeded,
  UnrepresentedNorm,
  NotInImage,
  EmptyInput,
  BranchAmbiguous,
  CutoffTooSmall,
  ParameterUnidentifiable,
  NonpositiveMin,
};

/// Stable snake_case identifier, e.g. "cutoff_too_small".
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hodgespec
