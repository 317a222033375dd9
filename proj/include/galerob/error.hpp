#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galerob {

enum class ErrorCode {
  InvalidParams,
  NoPath,
  InternalError,
  NonPlanarSquare,
  VertexInTwoCycle,
  ArityMismatch,
  NotDivisible,
  NotMonomial,
  OutOfBand,
  InvalidDegreeSet,
  InfiniteSet,
  NotSturdy,
  NotIntervalClosed,
  NotConnected,
  TwoCycleAtVertexOne,
  ThetaUndefined,
  NotInSet,
  TooLarge,
  ActionIllDefined,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type. The witness
/// carries a machine-readable description of the offending object (a weight,
/// a vertex, a path) so property-test failures can be replayed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::NonPlanarSquare: return "NonPlanarSquare";
    case ErrorCode::VertexInTwoCycle: return "VertexInTwoCycle";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::OutOfBand: return "OutOfBand";
    case ErrorCode::InvalidDegreeSet: return "InvalidDegreeSet";
    case ErrorCode::InfiniteSet: return "InfiniteSet";
    case ErrorCode::NotSturdy: return "NotSturdy";
    case ErrorCode::NotIntervalClosed: return "NotIntervalClosed";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TwoCycleAtVertexOne: return "TwoCycleAtVertexOne";
    case ErrorCode::ThetaUndefined: return "ThetaUndefined";
    case ErrorCode::NotInSet: return "NotInSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ActionIllDefined: return "ActionIllDefined";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace galerob
