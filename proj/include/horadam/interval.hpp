#pragma once

#include <string>

#include "horadam/numeric.hpp"

namespace horadam {

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
 public:
  /// Throws Error(InvalidArgument) when lo > hi.
  RationalInterval(Rational lo, Rational hi);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  /// Largest |x| over the interval.
  Rational magnitude() const;

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  RationalInterval operator-() const { return {-hi_, -lo_}; }
  friend RationalInterval operator+(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator-(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator*(const RationalInterval& x, const RationalInterval& y);
  /// Throws Error(IntervalStraddlesZero) when y contains zero.
  friend RationalInterval operator/(const RationalInterval& x, const RationalInterval& y);

  friend bool operator==(const RationalInterval& x, const RationalInterval& y) {
    return x.lo_ == y.lo_ && x.hi_ == y.hi_;
  }

  std::string to_string() const;

 private:
  Rational lo_, hi_;
};

/// [1/hi, 1/lo]; throws Error(IntervalStraddlesZero) when 0 is enclosed.
RationalInterval reciprocal(const RationalInterval& x);

}  // namespace horadam
