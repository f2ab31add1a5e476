#pragma once

#include <stdexcept>
#include <string>

namespace circfol {

/// Error categories. The numeric values are the CLI exit codes.
enum class ErrorCode : int {
  InvalidSpec = 2,
  DisconnectedCover = 3,
  TheoremDomain = 4,
  Internal = 5,
  Hypothesis = 6,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}

  ErrorCode code() const noexcept { return code_; }
  /// Short machine name of the concrete failure, e.g. "DegenerateJump".
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorCode code_;
  std::string kind_;
};

#define CIRCFOL_DEFINE_ERROR(Name, Code)                 \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& what)               \
        : Error(ErrorCode::Code, #Name, what) {}         \
  };

CIRCFOL_DEFINE_ERROR(InvalidSpec, InvalidSpec)
CIRCFOL_DEFINE_ERROR(DegenerateJump, InvalidSpec)
CIRCFOL_DEFINE_ERROR(DisconnectedCover, DisconnectedCover)
CIRCFOL_DEFINE_ERROR(TheoremDomain, TheoremDomain)
CIRCFOL_DEFINE_ERROR(HypothesisViolation, Hypothesis)
CIRCFOL_DEFINE_ERROR(UnitCircleRoot, Hypothesis)
// Numerical or arithmetic failures that indicate a defect or exhausted limits.
CIRCFOL_DEFINE_ERROR(InternalError, Internal)
CIRCFOL_DEFINE_ERROR(NotDivisible, Internal)
CIRCFOL_DEFINE_ERROR(NonIntegerCoefficients, Internal)
CIRCFOL_DEFINE_ERROR(NotPerfectSquare, Internal)
CIRCFOL_DEFINE_ERROR(PrecisionExhausted, Internal)
CIRCFOL_DEFINE_ERROR(FactorizationLimit, Internal)
CIRCFOL_DEFINE_ERROR(QuadratureNotConverged, Internal)

#undef CIRCFOL_DEFINE_ERROR

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "spec";
    case ErrorCode::DisconnectedCover: return "disconnected";
    case ErrorCode::TheoremDomain: return "theorem-domain";
    case ErrorCode::Internal: return "internal";
    case ErrorCode::Hypothesis: return "hypothesis";
  }
  return "internal";
}

}  // namespace circfol
