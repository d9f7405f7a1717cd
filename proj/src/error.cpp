#include "ipdhyp/error.hpp"

namespace ipd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorKind::GammaPole: return "GammaPole";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DegenerateLeading: return "DegenerateLeading";
    case ErrorKind::DegenerateCase: return "DegenerateCase";
    case ErrorKind::UnsupportedP: return "UnsupportedP";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::DenominatorPole: return "DenominatorPole";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::OnBranchCut: return "OnBranchCut";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::IntegerDifference: return "IntegerDifference";
    case ErrorKind::TrivialSplit: return "TrivialSplit";
    case ErrorKind::DistinctnessViolation: return "DistinctnessViolation";
    case ErrorKind::RejectionExhausted: return "RejectionExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ipd
