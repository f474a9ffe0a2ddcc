#pragma once

/**
 * Reciprocal series over weighted Horadam sub-sequences,
 *
 *   S_n = sum_{k >= n} sigma_k / D_k,   D_k = sum_i s_i W_{m k + l_i},
 *
 * with sigma_k = 1 (plain) or (-1)^k (alternating).
 *
 * Partial sums are exact rationals; the only approximation is the bound on
 * the omitted tail. Writing A = c1 sum_i s_i alpha^{l_i} and
 * B = |c2| sum_i s_i |beta|^{l_i}, Binet gives
 *
 *   |D_k - A alpha^{mk}| <= B |beta|^{mk},
 *
 * so once |A| alpha^{mk} >= 2 B |beta|^{mk} the terms are dominated by the
 * geometric series 2 / (|A| alpha^{mk}). When A < 0 the series is negated,
 * bounded, and negated back.
 */

#include <cstdint>

#include "horadam/interval.hpp"
#include "horadam/quadratic.hpp"
#include "horadam/recurrence.hpp"

namespace horadam {

struct SumSpec {
  RecurrenceParams params;
  WeightedSelector selector;
  bool alternating = false;
  std::int64_t n = 1;
};

enum class BoundKind { geometric, alternating };

struct TailEnclosure {
  RationalInterval interval;
  /// K - n + 1 exact terms summed before the tail bound took over.
  std::int64_t terms_used = 0;
  BoundKind bound_kind = BoundKind::geometric;
};

class ReciprocalSeries {
 public:
  /// Throws Error(InvalidSpec) unless validity_check(params, selector).overall.
  ReciprocalSeries(RecurrenceParams params, WeightedSelector selector, bool alternating);

  const RecurrenceParams& params() const noexcept { return seq_.params(); }
  const WeightedSelector& selector() const noexcept { return sel_; }
  bool alternating() const noexcept { return alternating_; }
  const SpectralData& spectral() const noexcept { return spec_; }
  const HoradamSequence& sequence() const noexcept { return seq_; }

  /// +1 or -1: the sign of A, and so the eventual sign of every D_k.
  int leading_sign() const noexcept { return lead_sign_; }
  /// |A|
  const FieldElement& leading_magnitude() const noexcept { return lead_; }
  /// B
  const FieldElement& error_coefficient() const noexcept { return err_; }

  Integer denominator(std::int64_t k) const { return seq_.weighted_denominator(sel_, k); }

  /// sum_{k=n}^{K} sigma_k / D_k; throws Error(ZeroDenominatorTerm) on D_k == 0.
  Rational partial_sum(std::int64_t n, std::int64_t K) const;

  /// Upper bound on |sum_{k >= K1} 1/D_k| (plain series).
  Rational tail_bound_plain(std::int64_t K1) const;

  /// 1/|D_{K1}|, valid once |D_k| is shown strictly increasing for all k >= K1.
  /// Throws Error(MonotonicityNotEstablished) otherwise.
  Rational tail_bound_alternating(std::int64_t K1) const;

  /// Interval of width <= eps containing S_n.
  TailEnclosure enclose(std::int64_t n, const Rational& eps) const;

  /// First k >= K1 from which the Binet envelopes guarantee positive,
  /// strictly increasing oriented terms.
  std::int64_t envelope_monotone_start(std::int64_t K1) const;

 private:
  struct GeometricTail {
    std::int64_t start;  // K*
    FieldElement bound;  // upper bound on sum_{k >= K*} 1/|D_k|
    bool exact;          // B == 0: bound is the tail itself
  };
  GeometricTail geometric_tail(std::int64_t K1) const;
  Integer oriented(std::int64_t k) const { return lead_sign_ * denominator(k); }
  int term_sign(std::int64_t k) const { return alternating_ && (k & 1) ? -1 : 1; }

  HoradamSequence seq_;
  WeightedSelector sel_;
  bool alternating_;
  SpectralData spec_;
  int lead_sign_;
  FieldElement lead_;
  FieldElement err_;
  FieldElement alpha_m_;
  FieldElement beta_abs_m_;
};

Rational partial_sum(const SumSpec& spec, std::int64_t K);
/// Requires !spec.alternating and K1 > spec.n.
Rational tail_bound_plain(const SumSpec& spec, std::int64_t K1);
/// Requires spec.alternating and K1 > spec.n.
Rational tail_bound_alternating(const SumSpec& spec, std::int64_t K1);
TailEnclosure sum_enclosure(const SumSpec& spec, const Rational& eps);
/// [1/hi, 1/lo]; throws Error(IntervalStraddlesZero) when 0 is enclosed.
RationalInterval inverse_enclosure(const TailEnclosure& tail);

}  // namespace horadam
