// Machine-checkable embodiments of the family's analytic structure:
// weighted orthonormality, finite-rank completeness projection, the two
// Laguerre differential equations, the derivative-shift identity, and the
// core/frictional potential decomposition.
#pragma once

#include <utility>
#include <vector>

#include "ltpoly/laguerre.hpp"

namespace ltpoly {

// Exact weighted inner product together with the Kronecker delta it must
// equal.  When n = n' the radicand collapses to 1, so the normalization
// statement is a pure rational identity.
struct InnerProductResult {
  RadicalScaled value;
  int expected;  // δ_{nn'}
};

// ∫₀^∞ e^{−x} x² 𝓛^α_{nl}(x) 𝓛̄^α_{n'l}(x) dx, computed symbolically through
// the moment identity ∫₀^∞ e^{−x} x^m dx = m! (the weight rides on the n'
// factor).  Exact; equals δ_{nn'}.
InnerProductResult weighted_inner(int alpha, int l, int n, int n_prime);

// Same integral with the weight attached to the first factor instead; the
// attachment choice must not change the result.
InnerProductResult weighted_inner_weight_first(int alpha, int l, int n, int n_prime);

// Residuals ∫₀^∞ K_N(x,x') ρ^α_{ml}(x') x'² dx' − ρ^α_{ml}(x) of the rank-N
// reproducing kernel K_N(x,x') = Σ_{n=l+1}^N ρ^α_{nl}(x) ρ̄^α_{nl}(x'), where
// ρ^α_{nl}(x) = e^{−x/2} 𝓛^α_{nl}(x).  The x' integral is exact, so each
// residual is exactly 0 for m ≤ N and exactly −ρ^α_{ml}(x) for m > N.
std::vector<Real> completeness_projection(int alpha, int l, int N, int m,
                                          const std::vector<Real>& x_points,
                                          const PrecisionContext& ctx);

// x·L'' + (ν+1−x)·L' + (μ−ν)·L for L = L_μ^ν, evaluated at x (numeric) or as
// an exact polynomial (must be identically zero).
Real ode_residual_glp(const GlpIndices& g, const Real& x, const PrecisionContext& ctx);
ExactPolynomial ode_residual_glp_poly(const GlpIndices& g);

// x·𝓛'' + (3−α−x)·𝓛' − [(1−n) + (l(l+1) + l(1−α))/x]·𝓛 at x (numeric), and
// the same residual multiplied through by x as an exact polynomial (must be
// identically zero).
Real ode_residual_ltp(const LtpIndices& idx, const Real& x, const PrecisionContext& ctx);
ExactPolynomial ode_residual_ltp_poly(const LtpIndices& idx);

// (d^k/dx^k) L_μ^ν − L_μ^{ν+k} as an exact polynomial (must be zero).
// Requires ν + k ≤ μ.
ExactPolynomial derivative_shift_check(const GlpIndices& g, int k);

// Potential decomposition at one radial point: core attraction U_n = −2ζ²n/x,
// the frictional part U^α_{nl} = −(2ζ²(1−α)/x)(𝓛'/𝓛 − l/x), and their sum.
// The bound-state energy −ζ²/2 rides along for bookkeeping only.
struct PotentialDecomposition {
  Real core;
  Real frictional;
  Real total;
  Real energy;
};

// Evaluates the decomposition; the frictional term is computed through the
// logarithmic derivative and independently through the Laguerre-ratio form
// −(2ζ²(1−α)/x)·L_q^{p+1}/L_q^p, which must agree.  Evaluation at a node of
// 𝓛 (equivalently of L_q^p) is a singular-point error.
PotentialDecomposition potentials(const LtpIndices& idx, const RadialScale& scale, const Real& r,
                                  const PrecisionContext& ctx);

// Both frictional-term routes side by side (logarithmic-derivative form
// first), for route-agreement checks.
std::pair<Real, Real> frictional_both_routes(const LtpIndices& idx, const RadialScale& scale,
                                             const Real& r, const PrecisionContext& ctx);

}  // namespace ltpoly
