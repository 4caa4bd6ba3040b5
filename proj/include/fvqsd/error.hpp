#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fvqsd {

enum class ErrorCode {
  NegativeRate,
  RateTooLarge,
  NotIrreducibleOnLambda,
  NoAbsorption,
  DimensionMismatch,
  NonFiniteTime,
  ToleranceNotPositive,
  SurvivalUnderflow,
  StepTooLarge,
  NormalizationDrift,
  MaxIterationsExceeded,
  DistanceUnderflow,
  UnsortedTimes,
  InvalidArgument,
  ConfigParseError,
  ChainValidationError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fvqsd
