#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mt {

enum class ErrorCode {
  InvalidInput,
  NotOrdinary,
  NotGoodOrdinary,
  LevelTooLarge,
  BoundExceeded,
  EigenspaceNotOneDimensional,
  InconsistentEigenvalues,
  RankPositive,
  ZeroElement,
  PrecisionInsufficient,
  NotAGenerator,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::NotGoodOrdinary: return "NotGoodOrdinary";
    case ErrorCode::LevelTooLarge: return "LevelTooLarge";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::EigenspaceNotOneDimensional: return "EigenspaceNotOneDimensional";
    case ErrorCode::InconsistentEigenvalues: return "InconsistentEigenvalues";
    case ErrorCode::RankPositive: return "RankPositive";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::PrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mt
