#pragma once

/**
 * Closed-form estimates B_n with (S_n)^{-1} - B_n -> 0.
 *
 *   general:            sum_i s_i (W_{mn+l_i} - W_{m(n-1)+l_i})
 *   alternating:        (-1)^n sum_i s_i (W_{mn+l_i} + W_{m(n-1)+l_i})
 *   block:              (W_{mn+t+1} - W_{mn} - W_{m(n-1)+t+1} + W_{m(n-1)}) / (alpha - 1)
 *   block alternating:  (-1)^n (W_{mn+t+1} - W_{mn} + W_{m(n-1)+t+1} - W_{m(n-1)}) / (alpha - 1)
 *
 * The block forms apply to s = (1, ..., 1), l = (0, ..., t). All require
 * n >= 2 so that every referenced index is non-negative.
 */

#include <cstdint>
#include <string>
#include <variant>

#include "horadam/interval.hpp"
#include "horadam/quadratic.hpp"
#include "horadam/recurrence.hpp"

namespace horadam {

class EstimateValue {
 public:
  enum class Kind { exact_integer, field_valued };

  explicit EstimateValue(Integer value) : value_(std::move(value)) {}
  explicit EstimateValue(FieldElement value) : value_(std::move(value)) {}

  Kind kind() const noexcept {
    return std::holds_alternative<Integer>(value_) ? Kind::exact_integer : Kind::field_valued;
  }
  bool is_integer() const noexcept { return kind() == Kind::exact_integer; }
  /// Throw std::bad_variant_access when the other payload is populated.
  const Integer& integer() const { return std::get<Integer>(value_); }
  const FieldElement& field() const { return std::get<FieldElement>(value_); }

  /// Interval of width <= eps containing the value (a point when integer).
  RationalInterval enclose(const Rational& eps) const;
  /// Integer digits, or x+y*sqrt(D).
  std::string exact_string() const;

 private:
  std::variant<Integer, FieldElement> value_;
};

EstimateValue estimate_general(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n);
EstimateValue estimate_alternating(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n);
EstimateValue estimate_block(const RecurrenceParams& params, std::int64_t m, std::int64_t t, std::int64_t n);
EstimateValue estimate_block_alternating(const RecurrenceParams& params, std::int64_t m, std::int64_t t,
                                         std::int64_t n);

/// Overloads that reuse a memoized sequence and skip revalidation; callers
/// must have validated the parameters already (e.g. through ReciprocalSeries).
namespace detail {
Integer general_value(const HoradamSequence& seq, const WeightedSelector& sel, std::int64_t n, bool alternating);
FieldElement block_value(const HoradamSequence& seq, const SpectralData& spec, std::int64_t m, std::int64_t t,
                         std::int64_t n, bool alternating);
}  // namespace detail

}  // namespace horadam
