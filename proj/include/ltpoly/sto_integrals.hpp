// Radial nuclear-attraction integrals of Slater-type orbitals over a
// Coulomb–Yukawa-type multiplier r^{μ*−1}e^{−ξr}: the closed-form value, the
// J-moments, and the four series routes (LTP/GLP × arranged/rearranged) whose
// truncation convergence is the quantity of interest.
//
// Series values are kept factored as
//     (basis transcendental) × (moment transcendental) × (exact rational sum)
// so the arranged and rearranged routes of one truncation order agree
// bit-exactly and every emitted value is correctly rounded.
#pragma once

#include <string>
#include <vector>

#include "ltpoly/expansions.hpp"

namespace ltpoly {

// One Slater-type radial factor R_{n*}(ζ,r) = (2ζ)^{n*+1/2}Γ(2n*+1)^{−1/2}
// r^{n*−1} e^{−ζr}; n* may be noninteger.
struct StoParams {
  BigRational n_star;  // > 0
  BigRational zeta;    // > 0

  void validate() const;
};

// ⟨bra| r^{μ*−1} e^{−ξr} |ket⟩ over r²dr.  The derived exponents are
// N* = n*+n'*−1 and ε = ζ+ζ' (the decay constant, not an energy).
struct IntegralSpec {
  StoParams bra;
  StoParams ket;
  BigRational mu_star;  // ≥ 1
  BigRational xi;       // ≥ 0

  BigRational n_star_sum() const { return bra.n_star + ket.n_star - 1; }
  BigRational eps_sum() const { return bra.zeta + ket.zeta; }
  void validate() const;
};

enum class SeriesBasis { ltp, glp };
enum class SeriesForm { arranged, rearranged };

// One series route; alpha engaged exactly when basis == ltp.
struct SeriesMethod {
  SeriesBasis basis;
  SeriesForm form;
  std::optional<int> alpha;

  void validate() const;
};

// "ltp-arranged", "ltp-rearranged", "glp-arranged", "glp-rearranged".
std::string method_name(const SeriesMethod& m);

// One convergence-table entry; fields in emitted-column order.
struct ConvergenceRow {
  std::string method;
  std::optional<int> alpha;
  int nu;
  int N;
  Real value;
  Real analytic;
  Real rel_err;
};

// R_{n*}(ζ,r); r = 0 admitted for n* ≥ 1.  Correctly rounded.
Real sto_radial(const StoParams& p, const Real& r, const PrecisionContext& ctx);

// (2ζ)^{n*+1/2}(2ζ')^{n'*+1/2}/√(Γ(2n*+1)Γ(2n'*+1)).
Real norm_factor(const IntegralSpec& spec, const PrecisionContext& ctx);

// Closed form norm_factor·Γ(N*+μ*+1)/(ε+ξ)^{N*+μ*+1}; the oracle every
// series route converges to.
Real analytic_I(const IntegralSpec& spec, const PrecisionContext& ctx);

// J^κ = norm_factor·Γ(N*+κ+2)/ε^{N*+κ+2}; requires N*+κ+2 > 0.
Real j_moment(const StoParams& bra, const StoParams& ket, const BigRational& kappa,
              const PrecisionContext& ctx);

// Order-N partial sum of the chosen route: arranged Σ_μ A(or B)·Σ_s Π(or β)·
// J^{n_int+s}, rearranged Σ_μ Q(or D)·J^{n_int+μ}.  LTP needs N ≥ ν+1,
// GLP N ≥ ν.  At fixed N the two forms of one basis agree bit-exactly.
Real series_I(const IntegralSpec& spec, const SeriesMethod& method, int nu, int N,
              const PrecisionContext& ctx);

// Rows for every requested method and N ∈ {first valid .. N_max}, each with
// the closed-form oracle and relative error, sorted by (method, alpha, N)
// and deduplicated.  Values are identical to per-row series_I calls.
std::vector<ConvergenceRow> convergence_table(const IntegralSpec& spec,
                                              const std::vector<SeriesMethod>& methods, int nu,
                                              int N_max, const PrecisionContext& ctx);

}  // namespace ltpoly
