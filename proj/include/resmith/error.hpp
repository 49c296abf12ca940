#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resmith {

enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  InvalidField,
  ZeroPolynomial,
  NotDivisible,
  BothZero,
  GradeTooSmall,
  DegreeZero,
  InvalidMoebius,
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  LiteralNotInField,
  SpecializationVanishes,
  DimensionMismatch,
  NotOnVariety,
  NotZeroDimensional,
  InternalInconsistency,
  MalformedBasis,
  ShapeViolation,
  ZeroAtPoint,
  NotEigenvalue,
  IncompleteVariety,
  ExhaustedField,
  ExtensionFieldRoots,
  GenerationFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `position` is a 1-based byte offset
/// and is only set for parser errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace resmith
