// Laguerre-series expansion of the power function r^{η*}e^{−ξr} in the 𝓛^α
// and nonstandard-GLP bases: the A/B coefficient tables, the order-N partial
// sums in basis arrangement, and the rearranged power-series forms with
// collected Q/D coefficients.
//
// Every coefficient is kept factored as
//     (exact rational or radical-scaled rational) × Γ(η*+c)/(1+ξ)^{η*+c}
// with the gamma ladder applied in exact arithmetic, so the alternating sums
// suffer no rounding cancellation and one transcendental evaluation serves a
// whole table.
#pragma once

#include <map>
#include <optional>

#include "ltpoly/laguerre.hpp"

namespace ltpoly {

// The split μ*−1 = n_int + η* with η* ∈ [0,1), plus the screening exponent ξ.
// η* = 0 (integer μ*) is admitted; every formula stays finite there and the
// expansion of a pure power terminates.
struct PowerFunctionSpec {
  BigRational mu_star;
  long n_int;
  BigRational eta_star;
  BigRational xi;
};

PowerFunctionSpec split_mu_star(const BigRational& mu_star, const BigRational& xi = BigRational(0));

// Γ(gamma_arg)/pow_base^{gamma_arg}: the one transcendental factor shared by
// a coefficient table.  Exact rational when gamma_arg is an integer.
struct GammaOverPow {
  BigRational gamma_arg;  // > 0
  BigRational pow_base;   // > 0
};

// (exact radical-scaled rational) × Γ-over-power factor, as one correctly
// rounded value at the target precision.
Real eval_scaled_gamma(const RadicalScaled& scale, const GammaOverPow& factor, mpfr_prec_t target);

// Exact parts of the LTP expansion coefficients A^{αν}_{η*μ}(ξ) for
// μ = ν+1 … mu_max: A_μ = transcendental × exact[μ−ν−1].
struct LtpCoeffExact {
  int alpha;
  int nu;
  BigRational eta_star;
  BigRational xi;
  GammaOverPow transcendental;        // Γ(η*+ν−α+3)/(1+ξ)^{η*+ν−α+3}
  std::vector<RadicalScaled> exact;   // radicand matches the μ-th 𝓛 normalization
};
LtpCoeffExact ltp_coeff_exact(int alpha, int nu, const BigRational& eta_star, const BigRational& xi,
                              int mu_max);

// Exact parts of the GLP expansion coefficients B^ν_{η*μ}(ξ) for
// μ = ν … mu_max: B_μ = transcendental × exact[μ−ν].
struct GlpCoeffExact {
  int nu;
  BigRational eta_star;
  BigRational xi;
  GammaOverPow transcendental;      // Γ(η*+ν+1)/(1+ξ)^{η*+ν+1}
  std::vector<BigRational> exact;
};
GlpCoeffExact glp_coeff_exact(int nu, const BigRational& eta_star, const BigRational& xi, int mu_max);

// Evaluated coefficient tables (μ → value at context precision); every entry
// is correctly rounded, so a higher-precision table rounds down to a
// lower-precision one.
struct ExpansionCoeffTable {
  std::optional<int> alpha;  // engaged for the LTP basis
  int nu;
  BigRational eta_star;
  BigRational xi;
  std::map<int, Real> coefficients;
  PrecisionContext precision;
};
ExpansionCoeffTable ltp_coeff_table(int alpha, int nu, const BigRational& eta_star,
                                    const BigRational& xi, int mu_max, const PrecisionContext& ctx);
ExpansionCoeffTable glp_coeff_table(int nu, const BigRational& eta_star, const BigRational& xi,
                                    int mu_max, const PrecisionContext& ctx);

// Rearranged-coefficient tables at truncation N: powers ν…N−1 (LTP, Q) or
// 0…N−ν (GLP, D).
struct RearrangedCoeffTable {
  std::optional<int> alpha;
  int nu;
  BigRational eta_star;
  BigRational xi;
  int N;
  std::map<int, Real> coefficients;
  PrecisionContext precision;
};
RearrangedCoeffTable ltp_rearranged_table(int alpha, int nu, const BigRational& eta_star,
                                          const BigRational& xi, int N,
                                          const PrecisionContext& ctx);
RearrangedCoeffTable glp_rearranged_table(int nu, const BigRational& eta_star,
                                          const BigRational& xi, int N,
                                          const PrecisionContext& ctx);

// Single coefficients.
Real a_coeff(int alpha, int nu, int mu, const BigRational& eta_star, const BigRational& xi,
             const PrecisionContext& ctx);
Real b_coeff(int nu, int mu, const BigRational& eta_star, const BigRational& xi,
             const PrecisionContext& ctx);
// Q^{αν}_{η*μ}(N,ξ) = Σ_{s=ν+1}^N A_s Π_{sμ} (requires ν ≤ μ ≤ N−1).
Real q_coeff(int alpha, int nu, int mu, const BigRational& eta_star, const BigRational& xi, int N,
             const PrecisionContext& ctx);
// D^ν_{η*μ}(N,ξ) = Σ_{s=ν}^N B_s β_{sμ} (requires 0 ≤ μ ≤ N−ν).
Real d_coeff(int nu, int mu, const BigRational& eta_star, const BigRational& xi, int N,
             const PrecisionContext& ctx);

// Order-N partial sums approximating r^{η*}e^{−ξr}.  The point r enters as
// an exact rational, so the arranged and rearranged forms of the same
// truncation produce the identical rational multiplier of the shared
// transcendental factor — the finite-reindexing identity holds bit-exactly.
Real arranged_sum_ltp(int alpha, int nu, const BigRational& eta_star, const BigRational& xi, int N,
                      const BigRational& r, const PrecisionContext& ctx);
Real rearranged_sum_ltp(int alpha, int nu, const BigRational& eta_star, const BigRational& xi,
                        int N, const BigRational& r, const PrecisionContext& ctx);
Real arranged_sum_glp(int nu, const BigRational& eta_star, const BigRational& xi, int N,
                      const BigRational& r, const PrecisionContext& ctx);
Real rearranged_sum_glp(int nu, const BigRational& eta_star, const BigRational& xi, int N,
                        const BigRational& r, const PrecisionContext& ctx);

// r^{μ*−1} e^{−ξr}; r = 0 allowed for μ* ≥ 1.
Real target_function(const PowerFunctionSpec& spec, const BigRational& r,
                     const PrecisionContext& ctx);

}  // namespace ltpoly
