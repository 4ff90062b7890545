#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacrank {

enum class ErrorCode {
  NonPrime,
  DegreeZero,
  DivideByZero,
  FieldMismatch,
  OrderMismatch,
  ModulusMismatch,
  NonUnit,
  RamifiedPrime,
  ZeroElement,
  PrecisionExhausted,
  BadExponent,
  SupportMeetsT,
  DegreeTooLarge,
  NoUnitMatch,
  HypothesisViolated,
  BaseNotP1,
  NotSquarefree,
  EvenCharacteristic,
  WrongGenus,
  WrongShape,
  BudgetExceeded,
  InconsistentCounts,
  Validation,
  Unsupported,
  Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace jacrank
