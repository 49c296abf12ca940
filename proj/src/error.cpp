#include "resmith/error.hpp"

namespace resmith {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::GradeTooSmall: return "GradeTooSmall";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::InvalidMoebius: return "InvalidMoebius";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::LiteralNotInField: return "LiteralNotInField";
    case ErrorCode::SpecializationVanishes: return "SpecializationVanishes";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::MalformedBasis: return "MalformedBasis";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::ZeroAtPoint: return "ZeroAtPoint";
    case ErrorCode::NotEigenvalue: return "NotEigenvalue";
    case ErrorCode::IncompleteVariety: return "IncompleteVariety";
    case ErrorCode::ExhaustedField: return "ExhaustedField";
    case ErrorCode::ExtensionFieldRoots: return "ExtensionFieldRoots";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

}  // namespace resmith
