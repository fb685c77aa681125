#pragma once

#include <stdexcept>
#include <string>

namespace fqcoh {

enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  ZeroElement,
  InvalidQuandle,
  ArityMismatch,
  IncompleteValueTable,
  NotQuandleCochain,
  NotDivisibleByP,
  CaseIICoefficientSingular,
  ConditionViolation,
  UnknownProposition,
  ResourceLimit,
  DimensionMismatch,
  ParseError,
};

inline const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InvalidQuandle: return "InvalidQuandle";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::IncompleteValueTable: return "IncompleteValueTable";
    case Errc::NotQuandleCochain: return "NotQuandleCochain";
    case Errc::NotDivisibleByP: return "NotDivisibleByP";
    case Errc::CaseIICoefficientSingular: return "CaseIICoefficientSingular";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::UnknownProposition: return "UnknownProposition";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fqcoh
