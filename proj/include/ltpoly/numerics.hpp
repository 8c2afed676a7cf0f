// Exact and high-precision arithmetic substrate: arbitrary-precision
// integers/rationals (GMP), radical-scaled rationals r·√d with canonical
// square extraction, a configurable-precision real type (MPFR), and the
// gamma function at integer-plus-fractional arguments.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ltpoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

// n! as an exact integer.  Negative n is rejected.
BigInt factorial(long n);

// base^exp for integer exp of either sign (base must be nonzero when exp < 0).
BigRational pow_rational(const BigRational& base, long exp);

// Parses a plain decimal string ("3.56", "-0.5e-2") into the exact rational
// it denotes.  Decimal inputs such as ζ = 3.56 must mean 356/100, not the
// nearest double, so all user-facing numeric input goes through this.
BigRational rational_from_decimal(std::string_view text);

// Splits n ≥ 0 as n = root²·squarefree.  Square factors are found by prime
// removal up to a fixed bound plus a perfect-square test on the cofactor;
// that is complete for every value arising here (factorial-built radicands
// have only small prime factors).
struct SquareSplit {
  BigInt root;
  BigInt squarefree;
};
SquareSplit extract_square(const BigInt& n);

// Value = rational × √radicand, with the radicand kept as a squarefree
// positive integer so that equal values have equal representations.  The
// zero value is canonically (0, 1).  Products of equal radicands collapse
// to pure rationals — which is what makes orthonormality checks exact.
class RadicalScaled {
 public:
  RadicalScaled();  // zero
  RadicalScaled(BigRational rational, BigRational radicand);
  static RadicalScaled from_rational(BigRational value);

  const BigRational& rational() const { return rational_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const;
  bool is_rational() const;  // radicand == 1
  // The exact rational value; throws unless is_rational().
  const BigRational& rational_value() const;

  RadicalScaled operator-() const;
  friend RadicalScaled operator*(const RadicalScaled& a, const RadicalScaled& b);
  // Addition is defined only between values sharing one radicand (or zero).
  friend RadicalScaled operator+(const RadicalScaled& a, const RadicalScaled& b);
  friend RadicalScaled operator-(const RadicalScaled& a, const RadicalScaled& b);
  friend bool operator==(const RadicalScaled& a, const RadicalScaled& b);

 private:
  BigRational rational_;
  BigRational radicand_;  // integer-valued, squarefree, ≥ 1
};

RadicalScaled radical_mul(const RadicalScaled& a, const RadicalScaled& b);

class Real;

// Correctly rounded conversion of rational × √radicand to prec bits.
Real to_real(const RadicalScaled& value, mpfr_prec_t prec);

// Mantissa width for HighPrecReal work.  Per-call context, never global state.
class PrecisionContext {
 public:
  explicit PrecisionContext(long mantissa_bits = 256);
  mpfr_prec_t bits() const { return bits_; }

 private:
  mpfr_prec_t bits_;
};

// Value-semantics wrapper over one mpfr_t.  Every value carries its own
// precision; binary operations round to the wider operand's precision.
class Real {
 public:
  Real();  // NaN at 64 bits
  explicit Real(mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_long(long value, mpfr_prec_t prec);
  // Correctly rounded at prec.
  static Real from_rational(const BigRational& value, mpfr_prec_t prec);
  // Exact decimal parse (via rational_from_decimal), then correct rounding.
  static Real from_decimal(std::string_view text, mpfr_prec_t prec);

  mpfr_prec_t precision() const;
  Real round_to(mpfr_prec_t prec) const;

  bool is_nan() const;
  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b);
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real pow(const Real& base, const Real& exponent);
  // x·2^k (exact) and x^k.
  Real mul_2exp(long k) const;
  Real pow_si(long k) const;

  // Scientific-notation string with enough digits to reparse bit-exactly
  // at this value's precision.
  std::string sci_string() const;
  static Real parse_sci(std::string_view text, mpfr_prec_t prec);

  double to_double() const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

// |a−b| measured in units in the last place at the wider operand's precision
// and the larger operand's binade.  0 when equal; +inf if either is NaN.
double ulp_distance(const Real& a, const Real& b);

// Γ(a) for a > 0, correct to well within 4 ulp at context precision.
// Reduces a = f + k with f ∈ [1, 2) by the recurrence, evaluates Γ(f) once
// at padded working precision, then applies the exact ladder.
Real gamma(const Real& a, const PrecisionContext& ctx);

// Γ(a) for exactly-known rational a > 0 at the given working precision;
// the result is within ~4 ulp of the true value at that precision.  Integer
// a yields the exact factorial, correctly rounded.
Real gamma_rational(const BigRational& a, mpfr_prec_t working_prec);

// Ziv-style correct rounding: recompute(w) must return the target value
// computed with relative error ≤ max_err_ulps units in the last place at
// working precision w ≥ target.  Retries with growing w until the rounding
// to `target` bits is provably correct.  Exact zeros are returned as such.
Real correctly_rounded(mpfr_prec_t target, unsigned long max_err_ulps,
                       const std::function<Real(mpfr_prec_t)>& recompute);

}  // namespace ltpoly
