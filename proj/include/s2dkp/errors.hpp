#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace s2dkp {

enum class ErrorCode {
  SingularPoint,
  DimensionMismatch,
  NegativeRadicand,
  ComplexRoots,
  GammaPole,
  NonNormalizable,
  SingularTransform,
  InvalidBoundary,
  MalformedConfig,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularPoint: return "SINGULAR_POINT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NegativeRadicand: return "NEGATIVE_RADICAND";
    case ErrorCode::ComplexRoots: return "COMPLEX_ROOTS";
    case ErrorCode::GammaPole: return "GAMMA_POLE";
    case ErrorCode::NonNormalizable: return "NON_NORMALIZABLE";
    case ErrorCode::SingularTransform: return "SINGULAR_TRANSFORM";
    case ErrorCode::InvalidBoundary: return "INVALID_BOUNDARY";
    case ErrorCode::MalformedConfig: return "MALFORMED_CONFIG";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace s2dkp
