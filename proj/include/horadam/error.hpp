#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horadam {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveDiscriminant,
  MismatchedRadicand,
  DivisionByZeroElement,
  InvalidSpec,
  ZeroDenominatorTerm,
  NonPositiveDenominator,
  MonotonicityNotEstablished,
  IntervalStraddlesZero,
  AlphaEqualsOne,
  DegenerateErrors,
  InsufficientData,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `index()` carries the offending
/// summation index k for per-term failures; `row()` carries the n of the
/// verification row that was being computed, when there was one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::int64_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }
  std::optional<std::int64_t> row() const noexcept { return row_; }

  /// Copy of this error tagged with the verification row n.
  Error at_row(std::int64_t n) const;

 private:
  ErrorCode code_;
  std::optional<std::int64_t> index_;
  std::optional<std::int64_t> row_;
};

}  // namespace horadam
