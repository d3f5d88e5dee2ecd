#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcodes {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  ZeroInverse,
  NonDivisorDegree,
  DimensionTooSmall,
  FieldMismatch,
  LengthMismatch,
  AmbientMismatch,
  EnumerationTooLarge,
  SearchTooLarge,
  TooFewCodewords,
  NotLinear,
  PreconditionViolation,
  DivisibilityViolation,
  InfeasibleParameters,
  LengthTooShort,
  LengthOutOfRange,
  ParameterTooSmall,
  ParameterOutOfRange,
  PropertyViolation,
  InternalConsistency,
  EmptySet,
  NonMonotoneInput,
  ParityViolation,
  RateTooLow,
  TooManyDeletions,
  ParseError,
  InvalidParams,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace subcodes
