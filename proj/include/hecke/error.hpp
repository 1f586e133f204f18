#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorCode {
  NonPrime,
  DegreeOutOfRange,
  CapExceeded,
  NotQuadraticExtension,
  NoRoot,
  FieldMismatch,
  SingularCurve,
  PointNotOnCurve,
  NotSigmaFixed,
  NonIntegralWeight,
  DepthTooSmall,
  UnsupportedVariant,
  SigmaFixedPoint,
  DimensionMismatch,
  EmptySolutionSpace,
  InconsistentSystem,
  WrongOrderForCharacter,
  InvariantViolation,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hecke
