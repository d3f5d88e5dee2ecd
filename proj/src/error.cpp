#include "subcodes/error.hpp"

namespace subcodes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NonDivisorDegree: return "NonDivisorDegree";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::TooFewCodewords: return "TooFewCodewords";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::LengthTooShort: return "LengthTooShort";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonMonotoneInput: return "NonMonotoneInput";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::RateTooLow: return "RateTooLow";
    case ErrorCode::TooManyDeletions: return "TooManyDeletions";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

}  // namespace subcodes
