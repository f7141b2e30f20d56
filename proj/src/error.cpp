#include "germlab/error.hpp"

namespace germlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::NegativeExponent: return "NEGATIVE_EXPONENT";
    case ErrorCode::VariableMismatch: return "VARIABLE_MISMATCH";
    case ErrorCode::VariableConflict: return "VARIABLE_CONFLICT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotExactDivision: return "NOT_EXACT_DIVISION";
    case ErrorCode::TooManyVariables: return "TOO_MANY_VARIABLES";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::NotIsolated: return "NOT_ISOLATED";
    case ErrorCode::NotAFiniteOrBug: return "NOT_A_FINITE_OR_BUG";
    case ErrorCode::EmptyDoublePoints: return "EMPTY_DOUBLE_POINTS";
    case ErrorCode::NonIntegerMultiplicity: return "NON_INTEGER_MULTIPLICITY";
    case ErrorCode::NonIntegerResult: return "NON_INTEGER_RESULT";
    case ErrorCode::NonIntegerOrbitCount: return "NON_INTEGER_ORBIT_COUNT";
    case ErrorCode::HoustonSumViolation: return "HOUSTON_SUM_VIOLATION";
    case ErrorCode::CheckFailed: return "CHECK_FAILED";
    case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
    case ErrorCode::UnstableGenericMember: return "UNSTABLE_GENERIC_MEMBER";
    case ErrorCode::NormalFormViolation: return "NORMAL_FORM_VIOLATION";
    case ErrorCode::SchemaViolation: return "SCHEMA_VIOLATION";
    case ErrorCode::UsageError: return "USAGE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

bool is_consistency_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::CheckFailed:
    case ErrorCode::HoustonSumViolation:
    case ErrorCode::NonIntegerResult:
    case ErrorCode::NonIntegerMultiplicity:
    case ErrorCode::NonIntegerOrbitCount:
    case ErrorCode::NotAFiniteOrBug:
      return true;
    default:
      return false;
  }
}

}  // namespace germlab
