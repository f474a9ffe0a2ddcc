#include "horadam/series.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {

namespace {

constexpr std::int64_t kEnvelopeStepLimit = 100000;
constexpr std::int64_t kInitialTerms = 8;
constexpr std::int64_t kTermLimit = std::int64_t{1} << 22;
constexpr unsigned kBoundBits = 48;

std::string k_str(std::int64_t k) { return "k = " + std::to_string(k); }

}  // namespace

ReciprocalSeries::ReciprocalSeries(RecurrenceParams params, WeightedSelector selector, bool alternating)
    : seq_(std::move(params)),
      sel_(std::move(selector)),
      alternating_(alternating),
      spec_([&] {
        const ValidityReport v = validity_check(seq_.params(), sel_);
        if (!v.overall) {
          throw Error(ErrorCode::InvalidSpec,
                      "parameters fail the convergence hypotheses (d_positive=" + std::to_string(v.d_positive) +
                          ", alpha_gt_one=" + std::to_string(v.alpha_gt_one) +
                          ", beta_abs_lt_one=" + std::to_string(v.beta_abs_lt_one) +
                          ", polynomial_condition=" + std::to_string(v.polynomial_condition_holds) +
                          ", c1_nonzero=" + std::to_string(v.c1_nonzero) +
                          ", leading_nonzero=" + std::to_string(v.leading_coefficient_nonzero) + ")");
        }
        return horadam::spectral(seq_.params());
      }()),
      lead_sign_(0),
      lead_(leading_coefficient(spec_, sel_)),
      err_(FieldElement::rational(Rational(0), spec_.radicand)),
      alpha_m_(pow(spec_.alpha, static_cast<std::uint64_t>(sel_.stride()))),
      beta_abs_m_(pow(spec_.beta.abs(), static_cast<std::uint64_t>(sel_.stride()))) {
  lead_sign_ = lead_.sign();
  lead_ = lead_.abs();
  if (!spec_.beta.is_zero()) {
    const FieldElement beta_abs = spec_.beta.abs();
    const auto weights = sel_.weights();
    const auto offsets = sel_.offsets();
    FieldElement sum = FieldElement::rational(Rational(0), spec_.radicand);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] == 0) continue;
      sum = sum + pow_signed(beta_abs, offsets[i]) * Rational(weights[i]);
    }
    err_ = spec_.c2.abs() * sum;
  }
}

Rational ReciprocalSeries::partial_sum(std::int64_t n, std::int64_t K) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lower summation index n must be >= 1");
  if (K < n) throw Error(ErrorCode::InvalidArgument, "partial_sum requires K >= n");
  Rational total = 0;
  for (std::int64_t k = n; k <= K; ++k) {
    const Integer d = denominator(k);
    if (d == 0) throw Error(ErrorCode::ZeroDenominatorTerm, "D_k vanishes at " + k_str(k), k);
    Rational term(Integer(term_sign(k)), d);
    term.canonicalize();
    total += term;
  }
  return total;
}

ReciprocalSeries::GeometricTail ReciprocalSeries::geometric_tail(std::int64_t K1) const {
  const FieldElement one = FieldElement::rational(Rational(1), spec_.radicand);
  const auto m = static_cast<std::uint64_t>(sel_.stride());
  // ratio of consecutive geometric terms subtracted from 1: 1 - alpha^-m = (alpha^m - 1)/alpha^m
  const FieldElement shrink = (alpha_m_ - one) / alpha_m_;

  FieldElement lead_k = lead_ * pow(spec_.alpha, m * static_cast<std::uint64_t>(K1));
  if (err_.is_zero()) {
    return {K1, one / (lead_k * shrink), true};
  }

  FieldElement err_k = err_ * Rational(2) * pow(beta_abs_m_, static_cast<std::uint64_t>(K1));
  std::int64_t k = K1;
  // lead alpha^{mk} / (err |beta|^{mk}) increases with k since alpha > 1 > |beta|
  while (compare(lead_k, err_k) < 0) {
    if (k - K1 > kEnvelopeStepLimit) {
      throw Error(ErrorCode::MonotonicityNotEstablished,
                  "geometric domination not reached within " + std::to_string(kEnvelopeStepLimit) + " terms", K1);
    }
    lead_k = lead_k * alpha_m_;
    err_k = err_k * beta_abs_m_;
    ++k;
  }
  return {k, FieldElement::rational(Rational(2), spec_.radicand) / (lead_k * shrink), false};
}

Rational ReciprocalSeries::tail_bound_plain(std::int64_t K1) const {
  if (K1 < 1) throw Error(ErrorCode::InvalidArgument, "tail start K1 must be >= 1");
  const GeometricTail tail = geometric_tail(K1);
  Rational bound = enclose_relative(tail.bound, kBoundBits).hi();
  for (std::int64_t k = K1; k < tail.start; ++k) {
    const Integer d = oriented(k);
    if (d == 0) throw Error(ErrorCode::ZeroDenominatorTerm, "D_k vanishes at " + k_str(k), k);
    bound += Rational(Integer(1), abs(d));
  }
  return bound;
}

std::int64_t ReciprocalSeries::envelope_monotone_start(std::int64_t K1) const {
  if (K1 < 1) throw Error(ErrorCode::InvalidArgument, "tail start K1 must be >= 1");
  const FieldElement one = FieldElement::rational(Rational(1), spec_.radicand);
  const auto m = static_cast<std::uint64_t>(sel_.stride());
  const FieldElement grow = alpha_m_ - one;
  const FieldElement spread = one + beta_abs_m_;

  FieldElement lead_k = lead_ * pow(spec_.alpha, m * static_cast<std::uint64_t>(K1));
  FieldElement err_k = err_ * pow(beta_abs_m_, static_cast<std::uint64_t>(K1));
  for (std::int64_t k = K1;; ++k) {
    // lower envelope positive, and lower envelope at k+1 above upper envelope at k
    if (compare(lead_k, err_k) > 0 && compare(lead_k * grow, err_k * spread) > 0) return k;
    if (k - K1 > kEnvelopeStepLimit) {
      throw Error(ErrorCode::MonotonicityNotEstablished,
                  "Binet envelopes do not separate within " + std::to_string(kEnvelopeStepLimit) + " terms", K1);
    }
    lead_k = lead_k * alpha_m_;
    err_k = err_k * beta_abs_m_;
  }
}

Rational ReciprocalSeries::tail_bound_alternating(std::int64_t K1) const {
  const std::int64_t settled = envelope_monotone_start(K1);
  Integer prev = oriented(K1);
  if (prev <= 0) {
    throw Error(ErrorCode::MonotonicityNotEstablished, "term is not positive at " + k_str(K1), K1);
  }
  const Integer first = prev;
  for (std::int64_t k = K1 + 1; k <= settled; ++k) {
    Integer cur = oriented(k);
    if (cur <= prev) {
      throw Error(ErrorCode::MonotonicityNotEstablished, "|D_k| does not increase at " + k_str(k), k);
    }
    prev = std::move(cur);
  }
  return Rational(Integer(1), first);
}

TailEnclosure ReciprocalSeries::enclose(std::int64_t n, const Rational& eps) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lower summation index n must be >= 1");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const Rational half_eps = eps / 2;

  // oriented partial sum: sum sigma_k / (sign(A) D_k)
  Rational partial = 0;
  std::int64_t last = n - 1;
  auto extend_to = [&](std::int64_t K) {
    for (std::int64_t k = last + 1; k <= K; ++k) {
      const Integer d = oriented(k);
      if (d == 0) throw Error(ErrorCode::ZeroDenominatorTerm, "D_k vanishes at " + k_str(k), k);
      if (d < 0) {
        throw Error(ErrorCode::NonPositiveDenominator,
                    "D_k has the opposite sign of its leading term at " + k_str(k), k);
      }
      partial += Rational(Integer(term_sign(k)), d);
    }
    if (K > last) last = K;
  };
  auto finish = [&](Rational lo, Rational hi, BoundKind kind) {
    RationalInterval iv(std::move(lo), std::move(hi));
    if (lead_sign_ < 0) iv = -iv;
    return TailEnclosure{std::move(iv), last - n + 1, kind};
  };

  for (std::int64_t count = kInitialTerms; count <= kTermLimit; count *= 2) {
    extend_to(n + count - 1);
    if (!alternating_) {
      const GeometricTail tail = geometric_tail(last + 1);
      if (tail.start > last + 1) extend_to(tail.start - 1);
      const RationalInterval bound = enclose_relative(tail.bound, kBoundBits);
      if (tail.exact ? bound.width() <= eps : bound.hi() < half_eps) {
        Rational lo = partial + (tail.exact ? bound.lo() : Rational(0));
        return finish(std::move(lo), partial + bound.hi(), BoundKind::geometric);
      }
    } else {
      Rational bound;
      try {
        bound = tail_bound_alternating(last + 1);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MonotonicityNotEstablished) throw;
        continue;
      }
      if (bound < half_eps) return finish(partial - bound, partial + bound, BoundKind::alternating);
    }
  }
  throw Error(ErrorCode::MonotonicityNotEstablished,
              "tail bound did not fall below eps/2 within " + std::to_string(kTermLimit) + " terms", n);
}

namespace {

ReciprocalSeries series_of(const SumSpec& spec) {
  return ReciprocalSeries(spec.params, spec.selector, spec.alternating);
}

}  // namespace

Rational partial_sum(const SumSpec& spec, std::int64_t K) { return series_of(spec).partial_sum(spec.n, K); }

Rational tail_bound_plain(const SumSpec& spec, std::int64_t K1) {
  if (spec.alternating) throw Error(ErrorCode::InvalidArgument, "tail_bound_plain needs a plain series");
  if (K1 <= spec.n) throw Error(ErrorCode::InvalidArgument, "tail start K1 must exceed n");
  return series_of(spec).tail_bound_plain(K1);
}

Rational tail_bound_alternating(const SumSpec& spec, std::int64_t K1) {
  if (!spec.alternating) throw Error(ErrorCode::InvalidArgument, "tail_bound_alternating needs an alternating series");
  if (K1 <= spec.n) throw Error(ErrorCode::InvalidArgument, "tail start K1 must exceed n");
  return series_of(spec).tail_bound_alternating(K1);
}

TailEnclosure sum_enclosure(const SumSpec& spec, const Rational& eps) { return series_of(spec).enclose(spec.n, eps); }

RationalInterval inverse_enclosure(const TailEnclosure& tail) { return reciprocal(tail.interval); }

}  // namespace horadam
