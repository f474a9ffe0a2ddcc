#include "horadam/error.hpp"

namespace horadam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveDiscriminant: return "NonPositiveDiscriminant";
    case ErrorCode::MismatchedRadicand: return "MismatchedRadicand";
    case ErrorCode::DivisionByZeroElement: return "DivisionByZeroElement";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ZeroDenominatorTerm: return "ZeroDenominatorTerm";
    case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorCode::MonotonicityNotEstablished: return "MonotonicityNotEstablished";
    case ErrorCode::IntervalStraddlesZero: return "IntervalStraddlesZero";
    case ErrorCode::AlphaEqualsOne: return "AlphaEqualsOne";
    case ErrorCode::DegenerateErrors: return "DegenerateErrors";
    case ErrorCode::InsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::int64_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

Error Error::at_row(std::int64_t n) const {
  Error tagged = *this;
  tagged.row_ = n;
  return tagged;
}

}  // namespace horadam
