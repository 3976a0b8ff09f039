#pragma once

#include <stdexcept>
#include <string>

namespace ewt {

enum class ErrorCode {
  NonHyperbolic,
  StencilTooWide,
  RangeError,
  NoShock,
  PastShockTime,
  InsufficientSnapshots,
  SingularFrame,
  DegenerateGradient,
  MuNonpositive,
  DegenerateTorusFrame,
  CoordinateFold,
  NoDecay,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode c);

/// Library error with a typed code; thrown where a module contract names an error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ewt
