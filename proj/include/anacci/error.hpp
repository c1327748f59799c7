#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anacci {

enum class ErrorCode {
  NonPositiveInput,
  NoConvergence,
  CriticalRegime,
  AllZeroInit,
  InvalidSpec,
  OrderOne,
  OOutsideBody,
  OEqualsA,
  LambdaOne,
  PTooSmall,
  TargetUnreachable,
  DegenerateShell,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every module; `code()` identifies the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CriticalRegime: return "CriticalRegime";
    case ErrorCode::AllZeroInit: return "AllZeroInit";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::OrderOne: return "OrderOne";
    case ErrorCode::OOutsideBody: return "OOutsideBody";
    case ErrorCode::OEqualsA: return "OEqualsA";
    case ErrorCode::LambdaOne: return "LambdaOne";
    case ErrorCode::PTooSmall: return "PTooSmall";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    case ErrorCode::DegenerateShell: return "DegenerateShell";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace anacci
