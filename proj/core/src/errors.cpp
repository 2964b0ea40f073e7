#include "tsurg/errors.hpp"

namespace tsurg {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimitiveVector: return "NonPrimitiveVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPrimitiveCurve: return "NonPrimitiveCurve";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::MissingPresentation: return "MissingPresentation";
    case ErrorCode::InfeasibleBettiNumbers: return "InfeasibleBettiNumbers";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InvalidLink: return "InvalidLink";
    case ErrorCode::BadCoefficients: return "BadCoefficients";
    case ErrorCode::NonzeroLinking: return "NonzeroLinking";
    case ErrorCode::NegativeDeficiency: return "NegativeDeficiency";
  }
  return "UnknownError";
}

DomainError::DomainError(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw DomainError(code, message);
}

}  // namespace tsurg
