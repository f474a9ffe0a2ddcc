#include "horadam/asymptotics.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {

namespace {

void require_row(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "estimates need n >= 2 (got " + std::to_string(n) + ")");
}

void require_valid(const RecurrenceParams& params, const WeightedSelector& sel) {
  if (!validity_check(params, sel).overall) {
    throw Error(ErrorCode::InvalidSpec, "parameters fail the convergence hypotheses");
  }
}

}  // namespace

RationalInterval EstimateValue::enclose(const Rational& eps) const {
  if (is_integer()) return RationalInterval::point(Rational(integer()));
  return horadam::enclose(field(), eps);
}

std::string EstimateValue::exact_string() const {
  return is_integer() ? integer().get_str() : field().to_string();
}

namespace detail {

Integer general_value(const HoradamSequence& seq, const WeightedSelector& sel, std::int64_t n, bool alternating) {
  const auto weights = sel.weights();
  const auto offsets = sel.offsets();
  const std::int64_t m = sel.stride();
  Integer total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    const Integer now = seq.at(m * n + offsets[i]);
    const Integer before = seq.at(m * (n - 1) + offsets[i]);
    total += weights[i] * (alternating ? Integer(now + before) : Integer(now - before));
  }
  if (alternating && (n & 1)) total = -total;
  return total;
}

FieldElement block_value(const HoradamSequence& seq, const SpectralData& spec, std::int64_t m, std::int64_t t,
                         std::int64_t n, bool alternating) {
  const Rational one(1);
  if (compare(spec.alpha, FieldElement::rational(one, spec.radicand)) == 0) {
    throw Error(ErrorCode::AlphaEqualsOne, "alpha = 1 makes the 1/(alpha - 1) prefactor undefined");
  }
  const Integer head = seq.at(m * n + t + 1) - seq.at(m * n);
  const Integer tail = seq.at(m * (n - 1) + t + 1) - seq.at(m * (n - 1));
  Integer bracket = alternating ? Integer(head + tail) : Integer(head - tail);
  if (alternating && (n & 1)) bracket = -bracket;
  const FieldElement numerator = FieldElement::rational(Rational(bracket), spec.radicand);
  return numerator / (spec.alpha - one);
}

}  // namespace detail

EstimateValue estimate_general(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n) {
  require_row(n);
  require_valid(params, sel);
  return EstimateValue(detail::general_value(HoradamSequence(params), sel, n, false));
}

EstimateValue estimate_alternating(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n) {
  require_row(n);
  require_valid(params, sel);
  return EstimateValue(detail::general_value(HoradamSequence(params), sel, n, true));
}

namespace {

EstimateValue block_estimate(const RecurrenceParams& params, std::int64_t m, std::int64_t t, std::int64_t n,
                             bool alternating) {
  require_row(n);
  const WeightedSelector sel = WeightedSelector::block(m, t);
  if (params.discriminant() > 0) {
    const SpectralData spec = spectral(params);
    if (compare(spec.alpha, FieldElement::rational(Rational(1), spec.radicand)) == 0) {
      throw Error(ErrorCode::AlphaEqualsOne, "alpha = 1 makes the 1/(alpha - 1) prefactor undefined");
    }
  }
  require_valid(params, sel);
  return EstimateValue(detail::block_value(HoradamSequence(params), spectral(params), m, t, n, alternating));
}

}  // namespace

EstimateValue estimate_block(const RecurrenceParams& params, std::int64_t m, std::int64_t t, std::int64_t n) {
  return block_estimate(params, m, t, n, false);
}

EstimateValue estimate_block_alternating(const RecurrenceParams& params, std::int64_t m, std::int64_t t,
                                         std::int64_t n) {
  return block_estimate(params, m, t, n, true);
}

}  // namespace horadam
