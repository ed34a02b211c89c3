#include "hodgespec/error.hpp"

namespace hodgespec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::ParseError: return "parse_error";
    case ErrorKind::UnitMismatch: return "unit_mismatch";
    case ErrorKind::NonpositiveScalar: return "nonpositive_scalar";
    case ErrorKind::EmptySpectrum: return "empty_spectrum";
    case ErrorKind::CutoffExceeded: return "cutoff_exceeded";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::DegreeZero: return "degree_zero";
    case ErrorKind::DegreeOutOfRange: return "degree_out_of_range";
    case ErrorKind::ZeroCovector: return "zero_covector";
    case ErrorKind::SingularBasis: return "singular_basis";
    case ErrorKind::NotPositiveDefinite: return "not_positive_definite";
    case ErrorKind::BoxTooLarge: return "box_too_large";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::UnrepresentedNorm: return "unrepresented_norm";
    case ErrorKind::NotInImage: return "not_in_image";
    case ErrorKind::EmptyInput: return "empty_input";
    case ErrorKind::BranchAmbiguous: return "branch_ambiguous";
    case ErrorKind::CutoffTooSmall: return "cutoff_too_small";
    case ErrorKind::ParameterUnidentifiable: return "parameter_unidentifiable";
    case ErrorKind::NonpositiveMin: return "nonpositive_min";
  }
  return "unknown";
}

}  // namespace hodgespec
