#pragma once

/**
 * Convergence experiments: for each n, enclose S_n and its inverse, evaluate
 * the estimate B_n, and enclose the error (S_n)^{-1} - B_n. The error is
 * expected to shrink by about |beta|^m per unit step in n.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/asymptotics.hpp"
#include "horadam/series.hpp"

namespace horadam {

enum class EstimateFamily { plain_general, alt_general, plain_block, alt_block };

std::string_view to_string(EstimateFamily family) noexcept;
/// Accepts the names produced by to_string; throws Error(InvalidArgument) otherwise.
EstimateFamily parse_family(std::string_view name);
constexpr bool is_alternating(EstimateFamily f) noexcept {
  return f == EstimateFamily::alt_general || f == EstimateFamily::alt_block;
}
constexpr bool is_block(EstimateFamily f) noexcept {
  return f == EstimateFamily::plain_block || f == EstimateFamily::alt_block;
}

struct VerificationRow {
  std::int64_t n;
  RationalInterval sum;
  RationalInterval inverse;
  EstimateValue estimate;
  /// Encloses inverse - B_n.
  RationalInterval error;
};

struct VerifyOptions {
  /// Rows computed in parallel; results are always reported in n order.
  unsigned threads = 1;
  /// Called once per finished row, in n order (sequential runs only stream
  /// rows as they finish, so a failing row leaves earlier rows delivered).
  std::function<void(const VerificationRow&)> on_row;
};

/// One row per n in [n_first, n_last]. Each row's error interval has width
/// about eps (at most 4 eps max(1, B_n^2)). Block families require a
/// block-shaped selector. Errors carry the offending n via Error::row().
std::vector<VerificationRow> verify_run(const RecurrenceParams& params, const WeightedSelector& sel,
                                        EstimateFamily family, std::int64_t n_first, std::int64_t n_last,
                                        const Rational& eps, const VerifyOptions& options = {});

struct DecayFit {
  /// exp(slope) of the least-squares line through log|error midpoint| vs n.
  Rational ratio_estimate;
  /// Encloses |beta|^m.
  RationalInterval predicted_ratio;
  Rational r_squared;
  std::size_t rows_used = 0;

  /// ratio_estimate inside predicted_ratio widened by the relative margin.
  bool agrees(const Rational& relative_margin) const;
};

/// Throws Error(DegenerateErrors) when every error interval contains zero
/// (an exact case), Error(InsufficientData) when fewer than 5 rows have
/// error midpoints that dominate their enclosure width by 10x.
DecayFit decay_fit(std::span<const VerificationRow> rows, const SpectralData& spectral, std::int64_t m);

struct RoundIdentityScan {
  /// Smallest N0 such that every n in [N0, last] has its inverse strictly
  /// inside (B_n - 1/2, B_n + 1/2).
  std::optional<std::int64_t> onset;
  std::int64_t first = 2;
  std::int64_t last = 2;
};

/// Onset from precomputed rows; rows must be consecutive in n.
RoundIdentityScan round_identity_onset(std::span<const VerificationRow> rows);

/// Integer-valued families only; scans n in [2, n_max].
RoundIdentityScan round_identity_scan(const RecurrenceParams& params, const WeightedSelector& sel,
                                      EstimateFamily family, std::int64_t n_max, const Rational& eps);

}  // namespace horadam
