// Exact polynomials (and Laurent polynomials: negative offsets are allowed
// so weighted partners with an x^{−α} factor stay representable) over
// rational coefficients times one shared radical factor √d.
#pragma once

#include <vector>

#include "ltpoly/numerics.hpp"

namespace ltpoly {

// value(x) = √radicand × Σ_i coeffs[i]·x^{offset+i}.
//
// Canonical form: the radical's rational part is folded into the
// coefficients (the stored radical is a pure √d with d squarefree), and the
// first and last stored coefficients are nonzero.  The zero polynomial is
// (offset 0, no coefficients, radical 1).  Equal values therefore have equal
// representations and operator== is structural.
class ExactPolynomial {
 public:
  ExactPolynomial();  // zero
  ExactPolynomial(long offset, std::vector<BigRational> coeffs,
                  RadicalScaled radical = RadicalScaled::from_rational(BigRational(1)));
  static ExactPolynomial constant(BigRational value);

  bool is_zero() const { return coeffs_.empty(); }
  long offset() const;  // lowest power with nonzero coefficient
  long degree() const;  // highest power with nonzero coefficient
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const RadicalScaled& radical() const { return radical_; }

  // Rational part of the coefficient of x^power (0 outside the stored range).
  BigRational rational_coeff(long power) const;
  // Full exact coefficient of x^power, radical included.
  RadicalScaled coeff(long power) const;

  ExactPolynomial derivative() const;
  ExactPolynomial times_x_power(long k) const;
  ExactPolynomial scaled(const BigRational& factor) const;
  ExactPolynomial scaled(const RadicalScaled& factor) const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b);

  // Horner evaluation at context precision.  x = 0 with a negative offset is
  // rejected; x = 0 otherwise evaluates the constant (or vanishing) term.
  Real eval(const Real& x, const PrecisionContext& ctx) const;

 private:
  long offset_ = 0;
  std::vector<BigRational> coeffs_;
  RadicalScaled radical_;
};

}  // namespace ltpoly
