#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipd {

enum class ErrorKind {
  DivisionByZero,
  LengthMismatch,
  InvalidArgument,
  IndexOutOfRange,
  PoleAtNonpositiveInteger,
  GammaPole,
  ZeroDenominator,
  DegenerateLeading,
  DegenerateCase,
  UnsupportedP,
  ZeroPolynomial,
  NonConvergence,
  DivergentSeries,
  DenominatorPole,
  SlowConvergence,
  OnBranchCut,
  PoleAtOne,
  IntegerDifference,
  TrivialSplit,
  DistinctnessViolation,
  RejectionExhausted,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this exception; `kind()`
/// is the machine-readable reason that verification reports carry forward.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ipd
