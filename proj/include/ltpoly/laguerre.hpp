// Exact construction and evaluation of the weighted-orthonormal Laguerre-type
// polynomial family 𝓛^α_{nl} (in both coefficient conventions), the
// generalized Laguerre polynomials feeding it, and the exponential-type
// radial functions built from them.
#pragma once

#include "ltpoly/polynomial.hpp"

namespace ltpoly {

// Quantum-number bookkeeping for 𝓛^α_{nl}.  The derived order/degree pair is
// p = 2l+2−α, q = n+l+1−α; validity requires α ≤ 2 and 0 ≤ l ≤ n−1, which
// makes q−p = n−l−1 ≥ 0 and q ≥ 0.
struct LtpIndices {
  int alpha;
  int n;
  int l;

  long p() const { return 2L * l + 2 - alpha; }
  long q() const { return static_cast<long>(n) + l + 1 - alpha; }
  void validate() const;
};

// Degree/order pair (μ, ν) for the nonstandard-convention generalized
// Laguerre polynomial L_μ^ν, nonzero of degree μ−ν when μ ≥ ν.
struct GlpIndices {
  int mu;
  int nu;

  void validate() const;
};

// Orbital exponent ζ > 0; the polynomial argument is x = 2ζr.
struct RadialScale {
  BigRational zeta;

  void validate() const;
};

// Range-clamped binomial: n!/(m!(n−m)!) for 0 ≤ m ≤ n, exactly 0 otherwise.
// The out-of-range zeros are what truncate every coefficient sum below.
BigInt binom_F(long m, long n);

// Coefficient of x^k in 𝓛^α_{nl}:
//   Π^{αl}_{nk} = (−1)^{k−l} √[(q−p)!/((2n)^α q!)] · F_{p+k−l}(q)/(k−l)!,
// exactly zero outside l ≤ k ≤ n−1.
RadicalScaled pi_coeff(const LtpIndices& idx, long k);

// 𝓛^α_{nl}(x) = Σ_{k=l}^{n−1} Π^{αl}_{nk} x^k (offset l, degree n−1).
// Memoized; the returned reference stays valid for the process lifetime.
const ExactPolynomial& ltp_poly(const LtpIndices& idx);

// Weighted partner 𝓛̄^α_{nl}(x) = (2n/x)^α 𝓛^α_{nl}(x); offset l−α may be
// negative (Laurent form) when α > l.
ExactPolynomial ltp_weighted_poly(const LtpIndices& idx);

// Coefficient of x^s in L_μ^ν: β^ν_{μs} = (−1)^{ν+s}(μ−s)!·F_s(μ)·F_{ν+s}(μ),
// zero outside 0 ≤ s ≤ μ−ν.
BigInt beta_coeff(const GlpIndices& g, long s);

// Nonstandard-convention generalized Laguerre polynomial
// L_μ^ν(x) = Σ_{s=0}^{μ−ν} β^ν_{μs} x^s.  Memoized like ltp_poly.
const ExactPolynomial& glp_nonstandard(const GlpIndices& g);

// Standard-convention generalized Laguerre polynomial
// L^{(order)}_{degree}(x) = Σ_k (−1)^k F_{degree−k}(degree+order) x^k/k!.
// The conventions are bridged by L_q^p = (−1)^p q!·L^{(p)}_{q−p}.
ExactPolynomial glp_standard(long degree, long order);

// 𝓛^α_{nl} rebuilt through the standard-convention route: the normalization
// (−1)^α √[(q−p)!/((2n)^α (q!)³)] times x^l·L_q^p, fixed so that the result
// must equal ltp_poly(idx) exactly.
ExactPolynomial ltp_standard_convention(const LtpIndices& idx);

// Horner evaluation at context precision (thin wrapper over
// ExactPolynomial::eval, kept as a named operation).
Real eval_poly(const ExactPolynomial& poly, const Real& x, const PrecisionContext& ctx);

// Radial function R^α_{nl}(ζ,r) = (2ζ)^{3/2} e^{−x/2} 𝓛^α_{nl}(x), x = 2ζr.
Real radial_R(const LtpIndices& idx, const RadialScale& scale, const Real& r,
              const PrecisionContext& ctx);

// Weighted partner R̄ built from 𝓛̄; r = 0 is rejected for α > 0 where the
// weight (2n/x)^α diverges.
Real radial_R_weighted(const LtpIndices& idx, const RadialScale& scale, const Real& r,
                       const PrecisionContext& ctx);

}  // namespace ltpoly
