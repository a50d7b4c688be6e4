#pragma once

#include <stdexcept>
#include <string>

namespace revsynth {

enum class ErrorCode {
  ParseError,
  InvalidPermutation,
  InvalidGate,
  NotConservative,
  WidthMismatch,
  WidthOutOfRange,
  UnexpandableMacro,
  InsufficientLines,
  OddPermutation,
  OddTokenCount,
  WeightMismatch,
  EqualStrings,
  DepthLimit,
  RangeError,
};

const char* to_string(ErrorCode code);

/// Every precondition violation in the library is reported through this type;
/// `code()` lets callers (the CLI in particular) map failures to exit codes.
class SynthError : public std::runtime_error {
 public:
  SynthError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace revsynth
