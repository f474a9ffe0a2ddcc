#pragma once

/**
 * Exact arithmetic in Q(sqrt(D)) and the spectral data of a Horadam
 * recurrence.
 *
 * The characteristic roots of x^2 - p x - q are
 *
 *   alpha = (p + sqrt(D)) / 2,   beta = (p - sqrt(D)) / 2,   D = p^2 + 4q,
 *
 * and W_n = c1 alpha^n - c2 beta^n with
 *
 *   c1 = (b - a beta) / (alpha - beta),   c2 = (b - a alpha) / (alpha - beta).
 *
 * D is kept as given (not reduced to its squarefree part). When D is a
 * perfect square every element is folded to y = 0, so the representation
 * x + y sqrt(D) stays unique in both cases. Signs and comparisons are
 * decided exactly by rational case analysis, never by floating point.
 */

#include <cstdint>
#include <string>

#include "horadam/interval.hpp"
#include "horadam/numeric.hpp"
#include "horadam/recurrence.hpp"

namespace horadam {

class FieldElement {
 public:
  /// Throws Error(InvalidArgument) unless D > 0.
  FieldElement(Rational x, Rational y, Integer radicand);
  static FieldElement rational(Rational x, Integer radicand) {
    return FieldElement(std::move(x), Rational(0), std::move(radicand));
  }

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Integer& radicand() const noexcept { return d_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  /// Exact sign of x + y sqrt(D): -1, 0 or +1.
  int sign() const;

  FieldElement conjugate() const { return FieldElement(x_, -y_, d_, Normalized{}); }
  FieldElement abs() const { return sign() < 0 ? -*this : *this; }
  /// x^2 - y^2 D
  Rational norm() const { return x_ * x_ - y_ * y_ * d_; }

  FieldElement operator-() const { return FieldElement(-x_, -y_, d_, Normalized{}); }
  friend FieldElement operator+(const FieldElement& u, const FieldElement& v);
  friend FieldElement operator-(const FieldElement& u, const FieldElement& v);
  friend FieldElement operator*(const FieldElement& u, const FieldElement& v);
  /// Throws Error(DivisionByZeroElement) when v == 0.
  friend FieldElement operator/(const FieldElement& u, const FieldElement& v);

  friend FieldElement operator+(const FieldElement& u, const Rational& r);
  friend FieldElement operator-(const FieldElement& u, const Rational& r);
  friend FieldElement operator*(const FieldElement& u, const Rational& r);

  friend bool operator==(const FieldElement& u, const FieldElement& v) {
    return u.d_ == v.d_ && u.x_ == v.x_ && u.y_ == v.y_;
  }

  /// "x+y*sqrt(D)", or just "x" when y == 0.
  std::string to_string() const;

 private:
  struct Normalized {};
  FieldElement(Rational x, Rational y, Integer radicand, Normalized)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(radicand)) {}

  Rational x_, y_;
  Integer d_;
};

/// -1, 0, +1 ordering of u and v, decided exactly.
int compare(const FieldElement& u, const FieldElement& v);

/// u^n by squaring.
FieldElement pow(const FieldElement& u, std::uint64_t n);
/// u^n for any integer n; negative n inverts first.
FieldElement pow_signed(const FieldElement& u, std::int64_t n);

struct SpectralData {
  Integer radicand;
  FieldElement alpha, beta, c1, c2;
};

/// Throws Error(NonPositiveDiscriminant) unless p^2 + 4q > 0.
SpectralData spectral(const RecurrenceParams& params);

/// [lo, hi] with lo^2 <= D <= hi^2 and hi - lo <= eps. A point interval
/// when D is a perfect square.
RationalInterval sqrt_enclosure(const Integer& radicand, const Rational& eps);

/// Interval of width <= eps containing u; exact point when u is rational.
RationalInterval enclose(const FieldElement& u, const Rational& eps);

/// Enclosure with width <= |u| 2^-bits that excludes zero (a point for u == 0).
RationalInterval enclose_relative(const FieldElement& u, unsigned bits);

struct ValidityReport {
  bool d_positive = false;
  bool alpha_gt_one = false;
  bool beta_abs_lt_one = false;
  /// p^2 + 2q - 2 < p sqrt(p^2 + 4q), evaluated exactly.
  bool polynomial_condition_holds = false;
  bool c1_nonzero = false;
  /// c1 * sum_i s_i alpha^{l_i} != 0, the leading coefficient of D_k.
  bool leading_coefficient_nonzero = false;
  bool overall = false;
};

ValidityReport validity_check(const RecurrenceParams& params, const WeightedSelector& sel);

/// c1 * sum_i s_i alpha^{l_i}
FieldElement leading_coefficient(const SpectralData& spec, const WeightedSelector& sel);

}  // namespace horadam
