#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsurg {

// Stable machine-readable error codes. The CLI maps these to JSON error
// payloads and exit code 1; library callers can switch on them.
enum class ErrorCode {
  NonPrimitiveVector,      // vector entries have gcd != 1
  DimensionMismatch,       // matrix shape incompatible with the operation
  NonPrimitiveCurve,       // surgery curve class with gcd(p, a, b) != 1
  NotCoprime,              // pair of integers expected to be coprime is not
  InvalidProfile,          // quadratic-form profile (1, 1) cannot occur
  MissingPresentation,     // framed torus carries no exterior presentation
  InfeasibleBettiNumbers,  // requested (H1, chi) would force b2 < 0
  NotUnimodular,           // matrix expected to have determinant +-1 does not
  InvalidLink,             // Dehn surgery link data violates its invariants
  BadCoefficients,         // surgery coefficients not of the form 1/n
  NonzeroLinking,          // linking matrix must vanish for ribbon/slice links
  NegativeDeficiency,      // presentation has more relators than generators
};

std::string_view error_name(ErrorCode code) noexcept;

class DomainError : public std::runtime_error {
public:
  DomainError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace tsurg
