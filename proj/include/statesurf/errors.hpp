#pragma once

#include <stdexcept>
#include <string>

namespace statesurf {

enum class ErrorCode {
  MalformedCode,
  ArcMultiplicity,
  NonPlanar,
  Disconnected,
  ZeroCrossings,
  InadequateState,
  TooManyCrossings,
  HypothesesNotMet,
  RegionNotPrime,
  InternalInvariant,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::ArcMultiplicity: return "ArcMultiplicity";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ZeroCrossings: return "ZeroCrossings";
    case ErrorCode::InadequateState: return "InadequateState";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::RegionNotPrime: return "RegionNotPrime";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Usage errors exit 1, data errors 2, internal invariant breaches 3.
  int exit_status() const noexcept {
    return code_ == ErrorCode::InternalInvariant || code_ == ErrorCode::RegionNotPrime ? 3 : 2;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace statesurf
