#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "ltpoly/numerics.hpp"

using namespace ltpoly;

TEST_SUITE("numerics") {

TEST_CASE("factorial matches repeated multiplication") {
  BigInt running(1);
  for (long n = 0; n <= 25; ++n) {
    CHECK(factorial(n) == running);
    running *= n + 1;
  }
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("pow_rational covers both exponent signs") {
  const BigRational three_halves(3, 2);
  CHECK(pow_rational(three_halves, 2) == BigRational(9, 4));
  CHECK(pow_rational(three_halves, -2) == BigRational(4, 9));
  CHECK(pow_rational(BigRational(7), 0) == 1);
  CHECK(pow_rational(BigRational(0), 3) == 0);
  CHECK_THROWS_AS(pow_rational(BigRational(0), -1), std::domain_error);
}

TEST_CASE("rational_from_decimal parses the exact denoted value") {
  CHECK(rational_from_decimal("3.56") == BigRational(89, 25));
  CHECK(rational_from_decimal("5.1") == BigRational(51, 10));
  CHECK(rational_from_decimal("-0.5e-2") == BigRational(-1, 200));
  CHECK(rational_from_decimal("0") == 0);
  CHECK(rational_from_decimal("2.30") == BigRational(23, 10));
  CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
}

TEST_CASE("extract_square splits off the full square part") {
  const auto s48 = extract_square(BigInt(48));
  CHECK(s48.root == 4);
  CHECK(s48.squarefree == 3);
  const auto s0 = extract_square(BigInt(0));
  CHECK(s0.root == 0);
  CHECK(s0.squarefree == 1);
  // Factorial-sized inputs: root²·squarefree reassembles, and the cofactor
  // has no remaining square (re-extraction is idempotent).
  for (long n : {1L, 7L, 12L, 20L, 30L}) {
    const BigInt value = factorial(n);
    const auto split = extract_square(value);
    CHECK(split.root * split.root * split.squarefree == value);
    const auto again = extract_square(split.squarefree);
    CHECK(again.root == 1);
    CHECK(again.squarefree == split.squarefree);
  }
  CHECK_THROWS_AS(extract_square(BigInt(-4)), std::domain_error);
}

TEST_CASE("radical values are kept in canonical form") {
  const RadicalScaled sqrt8(BigRational(1), BigRational(8));
  CHECK(sqrt8.rational() == 2);
  CHECK(sqrt8.radicand() == 2);

  const RadicalScaled zero(BigRational(0), BigRational(5));
  CHECK(zero.is_zero());
  CHECK(zero.radicand() == 1);
  CHECK(zero == RadicalScaled());

  const RadicalScaled sixth(BigRational(3), BigRational(1, 6));  // 3·√(1/6)
  CHECK(sixth.rational() == BigRational(1, 2));
  CHECK(sixth.radicand() == 6);

  CHECK_THROWS_AS(RadicalScaled(BigRational(1), BigRational(-2)), std::domain_error);
}

TEST_CASE("radical products collapse equal radicands") {
  const RadicalScaled sqrt2(BigRational(1), BigRational(2));
  const RadicalScaled two = radical_mul(sqrt2, sqrt2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == 2);

  const RadicalScaled a(BigRational(3), BigRational(1, 6));
  const RadicalScaled b(BigRational(-1), BigRational(1, 6));
  const RadicalScaled product = radical_mul(a, b);
  CHECK(product.is_rational());
  CHECK(product.rational_value() == BigRational(-1, 2));

  // Mixed radicands multiply without collapsing: √2·√3 = √6.
  const RadicalScaled sqrt3(BigRational(1), BigRational(3));
  const RadicalScaled sqrt6 = radical_mul(sqrt2, sqrt3);
  CHECK(sqrt6.rational() == 1);
  CHECK(sqrt6.radicand() == 6);
}

TEST_CASE("radical sums require a common radicand") {
  const RadicalScaled sqrt2(BigRational(1), BigRational(2));
  const RadicalScaled sqrt3(BigRational(1), BigRational(3));
  CHECK((sqrt2 + sqrt2).rational() == 2);
  CHECK((sqrt2 - sqrt2).is_zero());
  CHECK((sqrt2 + RadicalScaled()).radicand() == 2);
  CHECK((-sqrt2).rational() == -1);
  CHECK_THROWS_AS(sqrt2 + sqrt3, std::domain_error);
}

TEST_CASE("every nonzero radical has a multiplicative inverse") {
  std::mt19937_64 eng(0x5eed0001);
  for (int i = 0; i < 50; ++i) {
    const long num = static_cast<long>(eng() % 200) + 1;
    const long den = static_cast<long>(eng() % 200) + 1;
    const long d = static_cast<long>(eng() % 40) + 1;
    BigRational a(num, den);
    a.canonicalize();
    if (eng() % 2 == 0) a = -a;
    const RadicalScaled value(a, BigRational(d));
    // (a√d)·(1/(a·d_canonical)·√d_canonical) = 1 with d_canonical the stored
    // squarefree radicand.
    const BigRational d_canon = value.radicand();
    const RadicalScaled inverse(BigRational(1) / (value.rational() * d_canon), d_canon);
    const RadicalScaled product = radical_mul(value, inverse);
    CHECK(product.is_rational());
    CHECK(product.rational_value() == 1);
  }
}

TEST_CASE("radical to real conversion rounds down exactly") {
  const RadicalScaled values[] = {
      RadicalScaled(BigRational(89, 25), BigRational(1)),
      RadicalScaled(BigRational(-7, 3), BigRational(2)),
      RadicalScaled(BigRational(1, 720), BigRational(30)),
      RadicalScaled(),
  };
  for (const auto& v : values) {
    const Real wide = to_real(v, 512);
    const Real narrow = to_real(v, 256);
    CHECK(ulp_distance(wide.round_to(256), narrow) == 0.0);
  }
}

TEST_CASE("scientific strings reparse bit-exactly") {
  const PrecisionContext ctx;
  const Real values[] = {
      Real::from_decimal("3.56", ctx.bits()),
      sqrt(Real::from_long(2, ctx.bits())),
      -exp(Real::from_long(1, ctx.bits())),
      Real::from_long(0, ctx.bits()),
      Real::from_rational(BigRational(1, 3), ctx.bits()),
  };
  for (const auto& v : values) {
    const Real back = Real::parse_sci(v.sci_string(), ctx.bits());
    CHECK(ulp_distance(v, back) == 0.0);
  }
  CHECK_THROWS_AS(Real::parse_sci("not-a-number", 256), std::invalid_argument);
}

TEST_CASE("ulp distance separates neighbours and equals") {
  const Real one = Real::from_long(1, 256);
  CHECK(ulp_distance(one, one) == 0.0);
  CHECK(ulp_distance(one, Real::from_long(1, 128)) == 0.0);

  Real next = one;
  mpfr_nextabove(next.raw());
  CHECK(ulp_distance(one, next) == 1.0);

  const Real nan;
  CHECK(ulp_distance(nan, one) == std::numeric_limits<double>::infinity());
}

TEST_CASE("gamma agrees with the pi and recurrence oracles") {
  const PrecisionContext ctx;
  // Γ(1/2) = √π with π taken from the library constant, an independent path.
  Real pi(ctx.bits() + 64);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  const Real root_pi = sqrt(pi);
  const Real half = Real::from_rational(BigRational(1, 2), ctx.bits());
  CHECK(ulp_distance(gamma(half, ctx), root_pi.round_to(ctx.bits())) <= 8.0);

  // Γ(3.5) = (5/2)(3/2)(1/2)·Γ(1/2).
  const Real g35 = gamma(Real::from_decimal("3.5", ctx.bits()), ctx);
  const Real ladder = Real::from_rational(BigRational(15, 8), ctx.bits() + 64) * root_pi;
  CHECK(ulp_distance(g35, ladder.round_to(ctx.bits())) <= 8.0);

  // Integer argument: Γ(6) = 120.
  CHECK(ulp_distance(gamma(Real::from_long(6, ctx.bits()), ctx), Real::from_long(120, 256)) <= 4.0);

  CHECK_THROWS_AS(gamma(Real::from_long(0, 256), ctx), std::domain_error);
  CHECK_THROWS_AS(gamma(Real::from_long(-3, 256), ctx), std::domain_error);
}

TEST_CASE("gamma satisfies the recurrence at a thousand random points") {
  const PrecisionContext ctx;
  std::mt19937_64 eng(0x5eed0002);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    BigRational a_rat(static_cast<long>(eng() % 51200) + 1, 1024);  // (0, 50]
    a_rat.canonicalize();
    const Real a = Real::from_rational(a_rat, ctx.bits());
    const Real lhs = gamma(a + Real::from_long(1, ctx.bits()), ctx);
    const Real rhs = a * gamma(a, ctx);
    worst = std::max(worst, ulp_distance(lhs, rhs));
  }
  CHECK(worst <= 8.0);
}

TEST_CASE("gamma_rational is exact at integers and tight at halves") {
  CHECK(gamma_rational(BigRational(6), 256) == Real::from_long(120, 256));
  CHECK(gamma_rational(BigRational(1), 256) == Real::from_long(1, 256));

  Real pi(320);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  CHECK(ulp_distance(gamma_rational(BigRational(1, 2), 256), sqrt(pi).round_to(256)) <= 8.0);
  CHECK_THROWS_AS(gamma_rational(BigRational(0), 256), std::domain_error);
}

TEST_CASE("correctly_rounded matches direct rounding and keeps exact zeros") {
  const BigRational third(1, 3);
  const Real rounded = correctly_rounded(
      256, 8, [&](mpfr_prec_t w) { return Real::from_rational(third, w); });
  CHECK(ulp_distance(rounded, Real::from_rational(third, 256)) == 0.0);

  const Real zero = correctly_rounded(256, 8, [](mpfr_prec_t w) { return Real::from_long(0, w); });
  CHECK(zero.is_zero());

  const Real root2 = correctly_rounded(
      256, 8, [](mpfr_prec_t w) { return sqrt(Real::from_long(2, w)); });
  CHECK(ulp_distance(root2, sqrt(Real::from_long(2, 256))) == 0.0);
}

TEST_CASE("precision context rejects sub-64-bit mantissas") {
  CHECK(PrecisionContext().bits() == 256);
  CHECK(PrecisionContext(128).bits() == 128);
  CHECK_THROWS_AS(PrecisionContext(63), std::invalid_argument);
}

}  // TEST_SUITE
