#include "horadam/quadratic.hpp"

#include "horadam/error.hpp"

namespace horadam {

namespace {

void require_same_radicand(const FieldElement& u, const FieldElement& v) {
  if (u.radicand() != v.radicand()) {
    throw Error(ErrorCode::MismatchedRadicand,
                "radicands " + u.radicand().get_str() + " and " + v.radicand().get_str() + " differ");
  }
}

bool is_perfect_square(const Integer& d) { return mpz_perfect_square_p(d.get_mpz_t()) != 0; }

Integer isqrt(const Integer& d) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::size_t bit_length(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

FieldElement::FieldElement(Rational x, Rational y, Integer radicand)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(radicand)) {
  if (d_ <= 0) {
    throw Error(ErrorCode::InvalidArgument, "radicand must be positive (got " + d_.get_str() + ")");
  }
  x_.canonicalize();
  y_.canonicalize();
  if (y_ != 0 && is_perfect_square(d_)) {
    x_ += y_ * Rational(isqrt(d_));
    y_ = 0;
  }
}

int FieldElement::sign() const {
  const int sx = sgn(x_);
  const int sy = sgn(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: the larger of x^2 and y^2 D wins; equality needs a square D
  const int c = cmp(Rational(x_ * x_), Rational(y_ * y_ * d_));
  return c > 0 ? sx : sy;
}

FieldElement operator+(const FieldElement& u, const FieldElement& v) {
  require_same_radicand(u, v);
  return FieldElement(u.x_ + v.x_, u.y_ + v.y_, u.d_, FieldElement::Normalized{});
}

FieldElement operator-(const FieldElement& u, const FieldElement& v) {
  require_same_radicand(u, v);
  return FieldElement(u.x_ - v.x_, u.y_ - v.y_, u.d_, FieldElement::Normalized{});
}

FieldElement operator*(const FieldElement& u, const FieldElement& v) {
  require_same_radicand(u, v);
  Rational x = u.x_ * v.x_ + u.y_ * v.y_ * u.d_;
  Rational y = u.x_ * v.y_ + u.y_ * v.x_;
  return FieldElement(std::move(x), std::move(y), u.d_, FieldElement::Normalized{});
}

FieldElement operator/(const FieldElement& u, const FieldElement& v) {
  require_same_radicand(u, v);
  if (v.is_zero()) throw Error(ErrorCode::DivisionByZeroElement, "division by the zero element");
  const Rational n = v.norm();
  FieldElement num = u * v.conjugate();
  return FieldElement(num.x_ / n, num.y_ / n, u.d_, FieldElement::Normalized{});
}

FieldElement operator+(const FieldElement& u, const Rational& r) {
  return FieldElement(u.x_ + r, u.y_, u.d_, FieldElement::Normalized{});
}

FieldElement operator-(const FieldElement& u, const Rational& r) {
  return FieldElement(u.x_ - r, u.y_, u.d_, FieldElement::Normalized{});
}

FieldElement operator*(const FieldElement& u, const Rational& r) {
  return FieldElement(u.x_ * r, u.y_ * r, u.d_, FieldElement::Normalized{});
}

std::string FieldElement::to_string() const {
  if (y_ == 0) return x_.get_str();
  std::string s = x_ == 0 ? "" : x_.get_str();
  if (y_ > 0 && !s.empty()) s += "+";
  if (y_ == -1) {
    s += "-";
  } else if (y_ != 1) {
    s += y_.get_str() + "*";
  }
  return s + "sqrt(" + d_.get_str() + ")";
}

int compare(const FieldElement& u, const FieldElement& v) { return (u - v).sign(); }

FieldElement pow(const FieldElement& u, std::uint64_t n) {
  FieldElement result = FieldElement::rational(Rational(1), u.radicand());
  FieldElement base = u;
  for (; n != 0; n >>= 1) {
    if (n & 1U) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

FieldElement pow_signed(const FieldElement& u, std::int64_t n) {
  if (n >= 0) return pow(u, static_cast<std::uint64_t>(n));
  const FieldElement one = FieldElement::rational(Rational(1), u.radicand());
  return pow(one / u, static_cast<std::uint64_t>(-n));
}

SpectralData spectral(const RecurrenceParams& params) {
  const Integer d = params.discriminant();
  if (d <= 0) {
    throw Error(ErrorCode::NonPositiveDiscriminant,
                "p^2 + 4q = " + d.get_str() + " is not positive; the characteristic roots are not distinct reals");
  }
  const Rational half(1, 2);
  const Rational p_half = Rational(params.p()) / 2;
  FieldElement alpha(p_half, half, d);
  FieldElement beta(p_half, -half, d);
  const FieldElement gap = alpha - beta;
  const FieldElement a = FieldElement::rational(Rational(params.a()), d);
  const FieldElement b = FieldElement::rational(Rational(params.b()), d);
  FieldElement c1 = (b - a * beta) / gap;
  FieldElement c2 = (b - a * alpha) / gap;
  return SpectralData{d, std::move(alpha), std::move(beta), std::move(c1), std::move(c2)};
}

RationalInterval sqrt_enclosure(const Integer& radicand, const Rational& eps) {
  if (radicand < 1) throw Error(ErrorCode::InvalidArgument, "sqrt_enclosure needs D >= 1");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (is_perfect_square(radicand)) return RationalInterval::point(Rational(isqrt(radicand)));

  // Smallest k with 2^-k <= eps, then the dyadic cell of width 2^-k holding sqrt(D):
  // the same cell repeated bisection of a dyadic bracket converges to.
  Integer inv_eps = (eps.get_den() + eps.get_num() - 1) / eps.get_num();
  const std::size_t k = inv_eps <= 1 ? 0 : bit_length(Integer(inv_eps - 1));
  Integer scaled = radicand;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  const Integer s = isqrt(scaled);
  const Rational cell = pow2(-static_cast<long>(k));
  return {Rational(s) * cell, Rational(s + 1) * cell};
}

RationalInterval enclose(const FieldElement& u, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (u.is_rational()) return RationalInterval::point(u.x());
  const RationalInterval root = sqrt_enclosure(u.radicand(), eps / abs(u.y()));
  Rational lo = u.x() + u.y() * root.lo();
  Rational hi = u.x() + u.y() * root.hi();
  if (u.y() < 0) std::swap(lo, hi);
  return {std::move(lo), std::move(hi)};
}

RationalInterval enclose_relative(const FieldElement& u, unsigned bits) {
  if (u.is_zero()) return RationalInterval::point(Rational(0));
  const Rational scale = pow2(-static_cast<long>(bits));
  Rational eps = scale;
  for (;;) {
    RationalInterval iv = enclose(u, eps);
    if (!iv.contains_zero()) {
      const Rational inner = abs(iv.lo()) < abs(iv.hi()) ? abs(iv.lo()) : abs(iv.hi());
      const Rational target = inner * scale;
      if (iv.width() <= target) return iv;
      eps = target;
    } else {
      eps *= pow2(-64);
    }
  }
}

FieldElement leading_coefficient(const SpectralData& spec, const WeightedSelector& sel) {
  FieldElement sum = FieldElement::rational(Rational(0), spec.radicand);
  const auto weights = sel.weights();
  const auto offsets = sel.offsets();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    sum = sum + pow_signed(spec.alpha, offsets[i]) * Rational(weights[i]);
  }
  return spec.c1 * sum;
}

ValidityReport validity_check(const RecurrenceParams& params, const WeightedSelector& sel) {
  ValidityReport report;
  const Integer d = params.discriminant();
  report.d_positive = d > 0;
  if (!report.d_positive) return report;

  const SpectralData spec = spectral(params);
  const Rational one(1);
  report.alpha_gt_one = (spec.alpha - one).sign() > 0;
  report.beta_abs_lt_one = (spec.beta - one).sign() < 0 && (spec.beta + one).sign() > 0;

  // p sqrt(D) - (p^2 + 2q - 2) > 0
  const Integer lhs = params.p() * params.p() + 2 * params.q() - 2;
  const FieldElement gap(Rational(-lhs), Rational(params.p()), d);
  report.polynomial_condition_holds = gap.sign() > 0;

  report.c1_nonzero = !spec.c1.is_zero();
  // alpha > 0 because p >= 1, so negative offsets are fine
  report.leading_coefficient_nonzero = report.c1_nonzero && !leading_coefficient(spec, sel).is_zero();

  report.overall = report.d_positive && report.alpha_gt_one && report.beta_abs_lt_one &&
                   report.polynomial_condition_holds && report.c1_nonzero && report.leading_coefficient_nonzero;
  return report;
}

}  // namespace horadam
