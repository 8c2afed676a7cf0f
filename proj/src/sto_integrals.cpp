#include "ltpoly/sto_integrals.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltpoly {

void StoParams::validate() const {
  if (n_star <= 0) throw std::invalid_argument("StoParams: n_star must be positive");
  if (zeta <= 0) throw std::invalid_argument("StoParams: zeta must be positive");
}

void IntegralSpec::validate() const {
  bra.validate();
  ket.validate();
  if (mu_star < 1) throw std::invalid_argument("IntegralSpec: mu_star must be >= 1");
  if (xi < 0) throw std::invalid_argument("IntegralSpec: xi must be nonnegative");
}

void SeriesMethod::validate() const {
  if (basis == SeriesBasis::ltp && !alpha.has_value())
    throw std::invalid_argument("SeriesMethod: LTP route requires alpha");
  if (basis == SeriesBasis::glp && alpha.has_value())
    throw std::invalid_argument("SeriesMethod: GLP route takes no alpha");
}

std::string method_name(const SeriesMethod& m) {
  std::string name = m.basis == SeriesBasis::ltp ? "ltp" : "glp";
  name += m.form == SeriesForm::arranged ? "-arranged" : "-rearranged";
  return name;
}

namespace {

constexpr unsigned long kSeriesErrBudget = 1UL << 13;

Real pow_rr(const BigRational& base, const BigRational& expo, mpfr_prec_t w) {
  return pow(Real::from_rational(base, w), Real::from_rational(expo, w));
}

Real eval_gop(const GammaOverPow& t, mpfr_prec_t w) {
  return gamma_rational(t.gamma_arg, w) / pow_rr(t.pow_base, t.gamma_arg, w);
}

Real norm_factor_eval(const StoParams& a, const StoParams& b, mpfr_prec_t w) {
  const BigRational half(1, 2);
  const Real num =
      pow_rr(2 * a.zeta, a.n_star + half, w) * pow_rr(2 * b.zeta, b.n_star + half, w);
  const Real den =
      sqrt(gamma_rational(2 * a.n_star + 1, w) * gamma_rational(2 * b.n_star + 1, w));
  return num / den;
}

// Exact Λ_s = Γ(g+s)/(Γ(g)·ε^s) for s = 0..s_max: the rational ratio between
// J^{n_int+s} and the shared factor N_f·Γ(g)/ε^g.
std::vector<BigRational> moment_ladder(const BigRational& g, const BigRational& eps, int s_max) {
  std::vector<BigRational> ladder(static_cast<size_t>(s_max) + 1);
  ladder[0] = 1;
  for (int s = 1; s <= s_max; ++s) ladder[static_cast<size_t>(s)] =
      ladder[static_cast<size_t>(s) - 1] * (g + (s - 1)) / eps;
  return ladder;
}

// Exact rational partial sums S(N) of one series route, factored so that
// value(N) = norm_factor · basis_t · Γ(g_J)/ε^{g_J} · S(N).
struct SeriesExact {
  GammaOverPow basis_t;
  BigRational g_J;
  int N_first;
  std::vector<BigRational> partial;  // index N − N_first

  const BigRational& at(int N) const { return partial[static_cast<size_t>(N - N_first)]; }
};

SeriesExact series_exact(const IntegralSpec& spec, const SeriesMethod& method, int nu, int N_max) {
  spec.validate();
  method.validate();
  if (nu < 0) throw std::invalid_argument("series_exact: nu must be nonnegative");
  const PowerFunctionSpec split = split_mu_star(spec.mu_star, spec.xi);
  SeriesExact out;
  out.g_J = spec.n_star_sum() + split.n_int + 2;
  const std::vector<BigRational> lam = moment_ladder(out.g_J, spec.eps_sum(), N_max);

  if (method.basis == SeriesBasis::ltp) {
    out.N_first = nu + 1;
    if (N_max < out.N_first) throw std::invalid_argument("series_exact: LTP route needs N >= nu+1");
    const LtpCoeffExact table =
        ltp_coeff_exact(*method.alpha, nu, split.eta_star, split.xi, N_max);
    out.basis_t = table.transcendental;
    out.partial.reserve(static_cast<size_t>(N_max - nu));
    if (method.form == SeriesForm::arranged) {
      BigRational sum(0);
      for (int mu = nu + 1; mu <= N_max; ++mu) {
        const ExactPolynomial& poly = ltp_poly(LtpIndices{*method.alpha, mu, nu});
        BigRational inner(0);
        for (int s = nu; s <= mu - 1; ++s)
          inner += poly.rational_coeff(s) * lam[static_cast<size_t>(s)];
        const RadicalScaled& a_part = table.exact[static_cast<size_t>(mu - nu - 1)];
        sum += a_part.rational() * a_part.radicand() * inner;
        out.partial.push_back(sum);
      }
    } else {
      // Collect Q_μ(N) = Σ_{s≤N} A_s Π_{sμ} incrementally, then re-sum the
      // power series Σ_μ Q_μ Λ_μ in full at each N.
      std::vector<BigRational> q_hat(static_cast<size_t>(N_max), BigRational(0));  // index μ
      for (int N = nu + 1; N <= N_max; ++N) {
        const ExactPolynomial& poly = ltp_poly(LtpIndices{*method.alpha, N, nu});
        const RadicalScaled& a_part = table.exact[static_cast<size_t>(N - nu - 1)];
        const BigRational weight = a_part.rational() * a_part.radicand();
        for (int mu = nu; mu <= N - 1; ++mu)
          q_hat[static_cast<size_t>(mu)] += weight * poly.rational_coeff(mu);
        BigRational sum(0);
        for (int mu = nu; mu <= N - 1; ++mu)
          sum += q_hat[static_cast<size_t>(mu)] * lam[static_cast<size_t>(mu)];
        out.partial.push_back(sum);
      }
    }
    return out;
  }

  out.N_first = nu;
  if (N_max < out.N_first) throw std::invalid_argument("series_exact: GLP route needs N >= nu");
  const GlpCoeffExact table = glp_coeff_exact(nu, split.eta_star, split.xi, N_max);
  out.basis_t = table.transcendental;
  out.partial.reserve(static_cast<size_t>(N_max - nu) + 1);
  if (method.form == SeriesForm::arranged) {
    BigRational sum(0);
    for (int mu = nu; mu <= N_max; ++mu) {
      BigRational inner(0);
      for (int s = 0; s <= mu - nu; ++s)
        inner += BigRational(beta_coeff(GlpIndices{mu, nu}, s)) * lam[static_cast<size_t>(s)];
      sum += table.exact[static_cast<size_t>(mu - nu)] * inner;
      out.partial.push_back(sum);
    }
  } else {
    std::vector<BigRational> d_hat(static_cast<size_t>(N_max - nu) + 1, BigRational(0));
    for (int N = nu; N <= N_max; ++N) {
      const BigRational& b_part = table.exact[static_cast<size_t>(N - nu)];
      for (int mu = 0; mu <= N - nu; ++mu)
        d_hat[static_cast<size_t>(mu)] += b_part * BigRational(beta_coeff(GlpIndices{N, nu}, mu));
      BigRational sum(0);
      for (int mu = 0; mu <= N - nu; ++mu)
        sum += d_hat[static_cast<size_t>(mu)] * lam[static_cast<size_t>(mu)];
      out.partial.push_back(sum);
    }
  }
  return out;
}

Real series_value(const IntegralSpec& spec, const SeriesExact& exact, int N, mpfr_prec_t target) {
  const BigRational& sum = exact.at(N);
  const GammaOverPow moment{exact.g_J, spec.eps_sum()};
  return correctly_rounded(target, kSeriesErrBudget, [&](mpfr_prec_t w) {
    return norm_factor_eval(spec.bra, spec.ket, w) * eval_gop(exact.basis_t, w) *
           eval_gop(moment, w) * Real::from_rational(sum, w);
  });
}

}  // namespace

Real sto_radial(const StoParams& p, const Real& r, const PrecisionContext& ctx) {
  p.validate();
  if (r.is_nan() || r.sign() < 0) throw std::domain_error("sto_radial: r must be nonnegative");
  if (r.is_zero() && p.n_star < 1)
    throw std::domain_error("sto_radial: r = 0 requires n_star >= 1");
  const BigRational half(1, 2);
  return correctly_rounded(ctx.bits(), kSeriesErrBudget, [&](mpfr_prec_t w) {
    const mpfr_prec_t p_work = std::max(w, r.precision());
    const Real amplitude =
        pow_rr(2 * p.zeta, p.n_star + half, p_work) / sqrt(gamma_rational(2 * p.n_star + 1, p_work));
    const Real power = pow(r, Real::from_rational(p.n_star - 1, p_work));
    const Real damping = exp(-(Real::from_rational(p.zeta, p_work) * r));
    return amplitude * power * damping;
  });
}

Real norm_factor(const IntegralSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  return correctly_rounded(ctx.bits(), kSeriesErrBudget, [&](mpfr_prec_t w) {
    return norm_factor_eval(spec.bra, spec.ket, w);
  });
}

Real analytic_I(const IntegralSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  const BigRational g = spec.n_star_sum() + spec.mu_star + 1;
  const GammaOverPow factor{g, spec.eps_sum() + spec.xi};
  return correctly_rounded(ctx.bits(), kSeriesErrBudget, [&](mpfr_prec_t w) {
    return norm_factor_eval(spec.bra, spec.ket, w) * eval_gop(factor, w);
  });
}

Real j_moment(const StoParams& bra, const StoParams& ket, const BigRational& kappa,
              const PrecisionContext& ctx) {
  bra.validate();
  ket.validate();
  const BigRational g = bra.n_star + ket.n_star - 1 + kappa + 2;
  if (g <= 0) throw std::domain_error("j_moment: N* + kappa + 2 must be positive");
  const GammaOverPow factor{g, bra.zeta + ket.zeta};
  return correctly_rounded(ctx.bits(), kSeriesErrBudget, [&](mpfr_prec_t w) {
    return norm_factor_eval(bra, ket, w) * eval_gop(factor, w);
  });
}

Real series_I(const IntegralSpec& spec, const SeriesMethod& method, int nu, int N,
              const PrecisionContext& ctx) {
  const SeriesExact exact = series_exact(spec, method, nu, N);
  return series_value(spec, exact, N, ctx.bits());
}

std::vector<ConvergenceRow> convergence_table(const IntegralSpec& spec,
                                              const std::vector<SeriesMethod>& methods, int nu,
                                              int N_max, const PrecisionContext& ctx) {
  if (N_max < 1) throw std::invalid_argument("convergence_table: N_max must be >= 1");
  std::vector<SeriesMethod> ordered = methods;
  for (const SeriesMethod& m : ordered) m.validate();
  std::sort(ordered.begin(), ordered.end(), [](const SeriesMethod& a, const SeriesMethod& b) {
    const std::string an = method_name(a), bn = method_name(b);
    if (an != bn) return an < bn;
    return a.alpha.value_or(0) < b.alpha.value_or(0);
  });
  ordered.erase(std::unique(ordered.begin(), ordered.end(),
                            [](const SeriesMethod& a, const SeriesMethod& b) {
                              return method_name(a) == method_name(b) && a.alpha == b.alpha;
                            }),
                ordered.end());

  const Real oracle = analytic_I(spec, ctx);
  const mpfr_prec_t w = ctx.bits() + 64;
  std::vector<ConvergenceRow> rows;
  for (const SeriesMethod& m : ordered) {
    const SeriesExact exact = series_exact(spec, m, nu, N_max);
    const int N_first = std::max(1, exact.N_first);
    const std::string name = method_name(m);
    for (int N = N_first; N <= N_max; ++N) {
      ConvergenceRow row{name, m.alpha, nu, N, series_value(spec, exact, N, ctx.bits()), oracle,
                         Real()};
      row.rel_err = (abs(row.value.round_to(w) - row.analytic.round_to(w)) / abs(oracle))
                        .round_to(ctx.bits());
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ltpoly
