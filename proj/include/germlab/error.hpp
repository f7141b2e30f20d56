#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace germlab {

/// Machine-readable failure categories. The string form (see to_string) is
/// what reports and the CLI emit.
enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  VariableMismatch,
  VariableConflict,
  DimensionMismatch,
  NotExactDivision,
  TooManyVariables,
  InvalidArgument,
  CapExceeded,
  NotIsolated,
  NotAFiniteOrBug,
  EmptyDoublePoints,
  NonIntegerMultiplicity,
  NonIntegerResult,
  NonIntegerOrbitCount,
  HoustonSumViolation,
  CheckFailed,
  DegenerateForm,
  UnstableGenericMember,
  NormalFormViolation,
  SchemaViolation,
  UsageError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a mathematical inconsistency rather than bad
/// input (the CLI maps these to exit status 2).
bool is_consistency_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace germlab
