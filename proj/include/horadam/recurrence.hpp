#pragma once

/**
 * Horadam (generalized Fibonacci) sequences W_n(a, b, p, q):
 *
 *   W_0 = a,  W_1 = b,  W_n = p W_{n-1} + q W_{n-2}
 *
 * All values are exact big integers. Indices are non-negative; negative
 * indices are rejected rather than extended backwards.
 */

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "horadam/numeric.hpp"

namespace horadam {

class RecurrenceParams {
 public:
  /// Throws Error(InvalidArgument) unless p >= 1.
  RecurrenceParams(Integer a, Integer b, Integer p, Integer q);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }

  /// p^2 + 4q
  Integer discriminant() const { return p_ * p_ + 4 * q_; }

  friend bool operator==(const RecurrenceParams& l, const RecurrenceParams& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.p_ == r.p_ && l.q_ == r.q_;
  }

 private:
  Integer a_, b_, p_, q_;
};

/// Sub-sequence weighting D_k = sum_i s_i W_{m k + l_i}.
class WeightedSelector {
 public:
  /// Throws Error(InvalidArgument) when m < 1, sizes differ or are zero,
  /// some s_i < 0, all s_i are zero, or some l_i < 1 - m.
  WeightedSelector(std::int64_t m, std::vector<Integer> weights, std::vector<std::int64_t> offsets);

  /// s = (1, ..., 1), l = (0, 1, ..., t)
  static WeightedSelector block(std::int64_t m, std::int64_t t);

  std::int64_t stride() const noexcept { return m_; }
  std::span<const Integer> weights() const noexcept { return s_; }
  std::span<const std::int64_t> offsets() const noexcept { return l_; }
  std::size_t size() const noexcept { return s_.size(); }

  /// t when this selector has block shape, nullopt otherwise.
  std::optional<std::int64_t> block_length() const;

  friend bool operator==(const WeightedSelector& l, const WeightedSelector& r) {
    return l.m_ == r.m_ && l.s_ == r.s_ && l.l_ == r.l_;
  }

 private:
  std::int64_t m_;
  std::vector<Integer> s_;
  std::vector<std::int64_t> l_;
};

/// W_n by forward iteration from (W_0, W_1).
Integer w_iter(const RecurrenceParams& params, std::int64_t n);

/// W_n via powers of the companion matrix [[p, q], [1, 0]]; O(log n) products.
Integer w_fast(const RecurrenceParams& params, std::int64_t n);

/// W_lo, ..., W_hi in one pass.
std::vector<Integer> w_range(const RecurrenceParams& params, std::int64_t lo, std::int64_t hi);

/// Memoized W_n for a single parameter set. The cache only grows, is
/// guarded by a mutex, and hands out copies, so concurrent readers are safe.
class HoradamSequence {
 public:
  explicit HoradamSequence(RecurrenceParams params);
  HoradamSequence(const HoradamSequence& other);
  HoradamSequence& operator=(const HoradamSequence& other);

  const RecurrenceParams& params() const noexcept { return params_; }

  Integer at(std::int64_t n) const;

  /// D_k = sum_i s_i W_{m k + l_i}; requires k >= 1.
  Integer weighted_denominator(const WeightedSelector& sel, std::int64_t k) const;

 private:
  void extend_locked(std::int64_t n) const;

  RecurrenceParams params_;
  mutable std::mutex mutex_;
  mutable std::vector<Integer> terms_;
};

Integer weighted_denominator(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t k);

}  // namespace horadam
