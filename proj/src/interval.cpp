#include "horadam/interval.hpp"

#include <algorithm>
#include <array>

#include "horadam/error.hpp"

namespace horadam {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval endpoints out of order");
}

Rational RationalInterval::magnitude() const {
  Rational a = abs(lo_);
  Rational b = abs(hi_);
  return a > b ? a : b;
}

RationalInterval operator+(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ + y.lo_, x.hi_ + y.hi_};
}

RationalInterval operator-(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ - y.hi_, x.hi_ - y.lo_};
}

RationalInterval operator*(const RationalInterval& x, const RationalInterval& y) {
  std::array<Rational, 4> p{x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return {*lo, *hi};
}

RationalInterval reciprocal(const RationalInterval& x) {
  if (x.contains_zero()) {
    throw Error(ErrorCode::IntervalStraddlesZero, "cannot invert " + x.to_string());
  }
  return {1 / x.hi(), 1 / x.lo()};
}

RationalInterval operator/(const RationalInterval& x, const RationalInterval& y) {
  return x * reciprocal(y);
}

std::string RationalInterval::to_string() const {
  return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

}  // namespace horadam
