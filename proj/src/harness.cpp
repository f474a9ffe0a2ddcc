#include "horadam/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "horadam/error.hpp"

namespace horadam {

namespace {

constexpr int kShrinkAttempts = 8;

double log_abs(const Rational& value) {
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
  return std::log(std::fabs(num)) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

class RowEvaluator {
 public:
  RowEvaluator(const RecurrenceParams& params, const WeightedSelector& sel, EstimateFamily family,
               const Rational& eps)
      : series_(params, sel, is_alternating(family)), family_(family), eps_(eps) {
    if (is_block(family)) {
      const auto t = sel.block_length();
      if (!t) {
        throw Error(ErrorCode::InvalidArgument, "block families need s = (1,...,1) and l = (0,...,t)");
      }
      block_t_ = *t;
    }
  }

  VerificationRow operator()(std::int64_t n) const {
    try {
      return compute(n);
    } catch (const Error& e) {
      throw e.at_row(n);
    }
  }

 private:
  EstimateValue estimate(std::int64_t n) const {
    const bool alt = is_alternating(family_);
    if (is_block(family_)) {
      return EstimateValue(detail::block_value(series_.sequence(), series_.spectral(),
                                               series_.selector().stride(), block_t_, n, alt));
    }
    return EstimateValue(detail::general_value(series_.sequence(), series_.selector(), n, alt));
  }

  VerificationRow compute(std::int64_t n) const {
    EstimateValue b = estimate(n);
    const RationalInterval b_rough = b.is_integer() ? b.enclose(Rational(1)) : enclose_relative(b.field(), 8);
    Rational scale = b_rough.magnitude();
    scale *= scale;
    if (scale < 1) scale = 1;

    // |d(1/S)| ~ |dS| / S^2 and 1/S ~ B_n, so this keeps the inverse width near eps
    Rational sum_eps = eps_ / (4 * scale);
    for (int attempt = 0;; ++attempt) {
      TailEnclosure tail = series_.enclose(n, sum_eps);
      try {
        RationalInterval inverse = reciprocal(tail.interval);
        RationalInterval error = inverse - b.enclose(eps_ / 4);
        return VerificationRow{n, std::move(tail.interval), std::move(inverse), std::move(b), std::move(error)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IntervalStraddlesZero || attempt + 1 >= kShrinkAttempts) throw;
        sum_eps *= pow2(-32);
      }
    }
  }

  ReciprocalSeries series_;
  EstimateFamily family_;
  Rational eps_;
  std::int64_t block_t_ = 0;
};

}  // namespace

std::string_view to_string(EstimateFamily family) noexcept {
  switch (family) {
    case EstimateFamily::plain_general: return "plain_general";
    case EstimateFamily::alt_general: return "alt_general";
    case EstimateFamily::plain_block: return "plain_block";
    case EstimateFamily::alt_block: return "alt_block";
  }
  return "unknown";
}

EstimateFamily parse_family(std::string_view name) {
  for (auto f : {EstimateFamily::plain_general, EstimateFamily::alt_general, EstimateFamily::plain_block,
                 EstimateFamily::alt_block}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown estimate family '" + std::string(name) + "'");
}

std::vector<VerificationRow> verify_run(const RecurrenceParams& params, const WeightedSelector& sel,
                                        EstimateFamily family, std::int64_t n_first, std::int64_t n_last,
                                        const Rational& eps, const VerifyOptions& options) {
  if (n_first < 2) throw Error(ErrorCode::InvalidArgument, "verification rows need n >= 2");
  if (n_last < n_first) throw Error(ErrorCode::InvalidArgument, "empty n range");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");

  const RowEvaluator evaluate(params, sel, family, eps);
  const auto count = static_cast<std::size_t>(n_last - n_first + 1);
  std::vector<VerificationRow> rows;
  rows.reserve(count);

  if (options.threads <= 1 || count == 1) {
    for (std::int64_t n = n_first; n <= n_last; ++n) {
      rows.push_back(evaluate(n));
      if (options.on_row) options.on_row(rows.back());
    }
    return rows;
  }

  std::vector<std::optional<VerificationRow>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned threads = std::min<std::size_t>(options.threads, count);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            slots[i].emplace(evaluate(n_first + static_cast<std::int64_t>(i)));
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    rows.push_back(std::move(*slots[i]));
    if (options.on_row) options.on_row(rows.back());
  }
  return rows;
}

bool DecayFit::agrees(const Rational& relative_margin) const {
  return predicted_ratio.lo() * (1 - relative_margin) <= ratio_estimate &&
         ratio_estimate <= predicted_ratio.hi() * (1 + relative_margin);
}

DecayFit decay_fit(std::span<const VerificationRow> rows, const SpectralData& spectral, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "stride m must be >= 1");
  std::size_t zero_like = 0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const VerificationRow& row : rows) {
    if (row.error.contains_zero()) {
      ++zero_like;
      continue;
    }
    const Rational mid = row.error.midpoint();
    if (row.error.width() * 10 > abs(mid)) continue;
    xs.push_back(static_cast<double>(row.n));
    ys.push_back(log_abs(mid));
  }
  if (!rows.empty() && zero_like == rows.size()) {
    throw Error(ErrorCode::DegenerateErrors, "every error enclosure contains 0; the estimate is exact here");
  }
  if (xs.size() < 5) {
    throw Error(ErrorCode::InsufficientData,
                "need at least 5 rows with resolved non-zero errors (have " + std::to_string(xs.size()) + ")");
  }

  const auto k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  double r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  r2 = std::clamp(r2, 0.0, 1.0);

  DecayFit fit{Rational(std::exp(slope)),
               enclose_relative(pow(spectral.beta.abs(), static_cast<std::uint64_t>(m)), 40), Rational(r2),
               xs.size()};
  return fit;
}

RoundIdentityScan round_identity_onset(std::span<const VerificationRow> rows) {
  RoundIdentityScan scan;
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "no rows to scan");
  scan.first = rows.front().n;
  scan.last = rows.back().n;
  const Rational half(1, 2);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->estimate.is_integer()) {
      throw Error(ErrorCode::InvalidArgument, "round-identity scan needs integer-valued estimates");
    }
    const Rational b(it->estimate.integer());
    if (!(it->inverse.lo() > b - half && it->inverse.hi() < b + half)) break;
    scan.onset = it->n;
  }
  return scan;
}

RoundIdentityScan round_identity_scan(const RecurrenceParams& params, const WeightedSelector& sel,
                                      EstimateFamily family, std::int64_t n_max, const Rational& eps) {
  if (is_block(family)) {
    throw Error(ErrorCode::InvalidArgument, "round-identity scan needs an integer-valued (general) family");
  }
  const auto rows = verify_run(params, sel, family, 2, n_max, eps);
  return round_identity_onset(rows);
}

}  // namespace horadam
