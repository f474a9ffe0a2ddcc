#include <doctest.h>
#include <mpfr.h>

#include "horadam/error.hpp"
#include "horadam/quadratic.hpp"
#include "support.hpp"

using namespace horadam;
using namespace horadam::test;

namespace {

FieldElement fe(const char* x, const char* y, long d) { return FieldElement(Rational(x), Rational(y), Integer(d)); }

// Textbook bisection of [0, D+1]; independent of sqrt_enclosure.
RationalInterval bisect_sqrt(long d, const Rational& eps) {
  Rational lo = 0;
  Rational hi = d + 1;
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// |beta| < 1 evaluated in 340-bit (> 100 digit) floating point.
bool beta_small_mpfr(long p, long q) {
  mpfr_t root, beta;
  mpfr_inits2(340, root, beta, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(root, p * p + 4 * q, MPFR_RNDN);
  mpfr_sqrt(root, root, MPFR_RNDN);
  mpfr_si_sub(beta, p, root, MPFR_RNDN);
  mpfr_div_ui(beta, beta, 2, MPFR_RNDN);
  mpfr_abs(beta, beta, MPFR_RNDN);
  const bool small = mpfr_cmp_ui(beta, 1) < 0;
  mpfr_clears(root, beta, static_cast<mpfr_ptr>(nullptr));
  return small;
}

}  // namespace

TEST_CASE("spectral data of the Fibonacci recurrence") {
  const SpectralData s = spectral(fibonacci());
  CHECK(s.radicand == 5);
  CHECK(s.alpha == fe("1/2", "1/2", 5));
  CHECK(s.beta == fe("1/2", "-1/2", 5));
  CHECK(s.c1 == fe("0", "1/5", 5));
  CHECK(s.c2 == fe("0", "1/5", 5));
}

TEST_CASE("perfect-square radicand folds into the rational part") {
  const SpectralData s = spectral(geometric());
  CHECK(s.radicand == 4);
  CHECK(s.alpha == FieldElement::rational(2, 4));
  CHECK(s.beta.is_zero());
  CHECK(s.c1 == FieldElement::rational(1, 4));
  CHECK(s.c2.is_zero());
  CHECK(fe("1", "3", 9) == FieldElement::rational(10, 9));
}

TEST_CASE("spectral rejects non-positive discriminants") {
  CHECK_THROWS_AS(spectral(params(0, 1, 1, -1)), Error);
  try {
    spectral(params(0, 1, 2, -1));
    FAIL("expected NonPositiveDiscriminant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveDiscriminant);
  }
}

TEST_CASE("field arithmetic") {
  const SpectralData s = spectral(fibonacci());
  CHECK(s.alpha * s.beta == FieldElement::rational(-1, 5));
  const FieldElement u = fe("3/7", "-2", 5);
  CHECK(u + FieldElement::rational(0, 5) == u);
  CHECK(fe("1", "1", 5) * fe("1", "-1", 5) == FieldElement::rational(-4, 5));
  CHECK((u / s.alpha) * s.alpha == u);
  CHECK(u - u == FieldElement::rational(0, 5));
  CHECK(pow(u, 0) == FieldElement::rational(1, 5));
  CHECK(pow(s.alpha, 2) == fe("3/2", "1/2", 5));
  CHECK(pow(s.alpha, 2) == s.alpha + Rational(1));
  CHECK(pow(spectral(geometric()).beta, 2).is_zero());
  CHECK(pow_signed(s.alpha, -3) * pow(s.alpha, 3) == FieldElement::rational(1, 5));

  CHECK_THROWS_AS(u / FieldElement::rational(0, 5), Error);
  CHECK_THROWS_AS(u + FieldElement::rational(1, 13), Error);
  try {
    (void)(u * fe("1", "1", 13));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedRadicand);
  }
}

TEST_CASE("exact sign and comparison") {
  CHECK(fe("2", "-1", 5).sign() < 0);   // 2 - 2.236
  CHECK(fe("-2", "1", 5).sign() > 0);
  CHECK(fe("3", "-1", 5).sign() > 0);
  CHECK(fe("0", "-1", 5).sign() < 0);
  CHECK(FieldElement::rational(0, 5).sign() == 0);
  const SpectralData s = spectral(fibonacci());
  CHECK(compare(s.alpha, s.beta) > 0);
  CHECK(compare(s.beta.abs(), FieldElement::rational(1, 5)) < 0);
  CHECK(fe("1/2", "1/2", 5).to_string() == "1/2+1/2*sqrt(5)");
  CHECK(fe("0", "-1", 5).to_string() == "-sqrt(5)");
}

TEST_CASE("sqrt_enclosure") {
  CHECK(sqrt_enclosure(4, Rational(1, 7)) == RationalInterval::point(2));
  CHECK(sqrt_enclosure(1, Rational(1)).contains(Rational(1)));

  const Rational eps(1, 1000);
  const RationalInterval r = sqrt_enclosure(5, eps);
  CHECK(r.width() <= eps);
  CHECK(r.lo() * r.lo() <= 5);
  CHECK(r.hi() * r.hi() >= 5);
  CHECK(r.contains(Rational("22360679/10000000")));

  for (long d : {2L, 3L, 5L, 7L, 8L, 12L, 45L, 1000003L}) {
    for (const Rational& e : {Rational(1, 3), Rational(1, 1000), Rational(1, 1000000007)}) {
      const RationalInterval mine = sqrt_enclosure(d, e);
      const RationalInterval oracle = bisect_sqrt(d, e);
      CHECK(mine.width() <= e);
      CHECK(mine.lo() * mine.lo() <= d);
      CHECK(mine.hi() * mine.hi() >= d);
      CHECK(mine.lo() <= oracle.hi());  // both hold sqrt(d), so they overlap
      CHECK(oracle.lo() <= mine.hi());
    }
  }
}

TEST_CASE("enclose") {
  CHECK(enclose(FieldElement::rational(3, 5), Rational(1, 10)) == RationalInterval::point(3));
  const SpectralData s = spectral(fibonacci());
  const Rational eps(1, 1000000);
  const RationalInterval a = enclose(s.alpha, eps);
  CHECK(a.width() <= eps);
  CHECK(a.contains(Rational("16180339887/10000000000")));
  const RationalInterval b = enclose(s.beta, eps);
  CHECK(b.width() <= eps);
  CHECK(b.contains(Rational("-6180339887/10000000000")));

  const FieldElement u = fe("-17/3", "22/7", 13);
  Rational e = 1;
  RationalInterval prev = enclose(u, e);
  for (int i = 0; i < 12; ++i) {
    e /= 10;
    const RationalInterval next = enclose(u, e);
    CHECK(next.width() <= e);
    CHECK(prev.contains(next));
    prev = next;
  }

  const RationalInterval rel = enclose_relative(pow(s.beta, 60), 30);
  CHECK_FALSE(rel.contains_zero());
  CHECK(rel.width() <= rel.magnitude() * pow2(-30));
}

TEST_CASE("Binet consistency: c1 alpha^n - c2 beta^n is exactly W_n") {
  for (const auto& prm : {fibonacci(), pell(), params(2, 1, 3, -1), params(-4, 7, 1, 6), geometric()}) {
    const SpectralData s = spectral(prm);
    CHECK(s.alpha + s.beta == FieldElement::rational(Rational(prm.p()), s.radicand));
    for (std::int64_t n = 0; n <= 60; ++n) {
      const FieldElement w = s.c1 * pow(s.alpha, static_cast<std::uint64_t>(n)) -
                             s.c2 * pow(s.beta, static_cast<std::uint64_t>(n));
      REQUIRE(w.is_rational());
      REQUIRE(w.x() == Rational(w_iter(prm, n)));
      REQUIRE(enclose(w, Rational(1, 2)).contains(Rational(w_iter(prm, n))));
    }
  }
}

TEST_CASE("root relations hold across the parameter grid") {
  for (long p = 1; p <= 6; ++p) {
    for (long q = -5; q <= 6; ++q) {
      if (p * p + 4 * q <= 0) continue;
      const SpectralData s = spectral(params(1, 1, p, q));
      CHECK(s.alpha + s.beta == FieldElement::rational(p, s.radicand));
      CHECK(s.alpha * s.beta == FieldElement::rational(-q, s.radicand));
    }
  }
}

TEST_CASE("validity_check examples") {
  const ValidityReport fib = validity_check(fibonacci(), single());
  CHECK(fib.d_positive);
  CHECK(fib.alpha_gt_one);
  CHECK(fib.beta_abs_lt_one);
  CHECK(fib.polynomial_condition_holds);
  CHECK(fib.c1_nonzero);
  CHECK(fib.leading_coefficient_nonzero);
  CHECK(fib.overall);

  const ValidityReport neg = validity_check(params(0, 1, 1, -1), single());
  CHECK_FALSE(neg.d_positive);
  CHECK_FALSE(neg.overall);

  CHECK(validity_check(params(0, 1, 3, -1), selector(2, {1, 1}, {0, 1})).overall);

  const ValidityReport flat = validity_check(params(0, 1, 1, 0), single());
  CHECK(flat.d_positive);
  CHECK_FALSE(flat.alpha_gt_one);
  CHECK_FALSE(flat.overall);

  // a = b = 0 gives the zero sequence
  const ValidityReport zero = validity_check(params(0, 0, 1, 1), single());
  CHECK_FALSE(zero.c1_nonzero);
  CHECK_FALSE(zero.overall);

  // beta = 1 sits on the boundary
  const ValidityReport edge = validity_check(params(0, 1, 4, -3), single());
  CHECK_FALSE(edge.beta_abs_lt_one);
  CHECK_FALSE(edge.polynomial_condition_holds);
}

TEST_CASE("validity flags agree with a high-precision oracle on the grid") {
  int counterexamples = 0;
  for (long p = 1; p <= 6; ++p) {
    for (long q = -5; q <= 6; ++q) {
      if (p * p + 4 * q <= 0) continue;
      const ValidityReport r = validity_check(params(0, 1, p, q), single());
      CHECK(r.beta_abs_lt_one == beta_small_mpfr(p, q));
      if (r.polynomial_condition_holds && !r.beta_abs_lt_one) ++counterexamples;
    }
  }
  CHECK(counterexamples == 0);
}
