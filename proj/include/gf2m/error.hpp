#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gf2m {

enum class Errc {
  ParseError,
  InvalidArgument,
  UnsupportedDegree,
  NotIrreducible,
  NotPrimitive,
  FieldMismatch,
  ZeroInverse,
  DivisionByZero,
  ZeroToZero,
  DivisionByZeroPoly,
  DegreeZero,
  NotIrreducibleInput,
  DependentBasis,
  DimensionMismatch,
  UnsupportedTrinomial,
  BadConnectionPolynomial,
  WidthMismatch,
  LengthMismatch,
  TooFewWords,
  BoundViolation,
  // An internal consistency check failed; never a user error.
  InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroToZero: return "ZeroToZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::NotIrreducibleInput: return "NotIrreducibleInput";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedTrinomial: return "UnsupportedTrinomial";
    case Errc::BadConnectionPolynomial: return "BadConnectionPolynomial";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewWords: return "TooFewWords";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace gf2m
