#include "fvqsd/error.hpp"

namespace fvqsd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::RateTooLarge: return "RateTooLarge";
    case ErrorCode::NotIrreducibleOnLambda: return "NotIrreducibleOnLambda";
    case ErrorCode::NoAbsorption: return "NoAbsorption";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteTime: return "NonFiniteTime";
    case ErrorCode::ToleranceNotPositive: return "ToleranceNotPositive";
    case ErrorCode::SurvivalUnderflow: return "SurvivalUnderflow";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NormalizationDrift: return "NormalizationDrift";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::DistanceUnderflow: return "DistanceUnderflow";
    case ErrorCode::UnsortedTimes: return "UnsortedTimes";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::ChainValidationError: return "ChainValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fvqsd
