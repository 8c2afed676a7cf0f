#include "ltpoly/expansions.hpp"

#include <stdexcept>

namespace ltpoly {

PowerFunctionSpec split_mu_star(const BigRational& mu_star, const BigRational& xi) {
  if (mu_star < 1) throw std::invalid_argument("split_mu_star: mu_star must be >= 1");
  if (xi < 0) throw std::invalid_argument("split_mu_star: xi must be nonnegative");
  const BigRational shifted = mu_star - 1;
  BigInt floor_val;
  mpz_fdiv_q(floor_val.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  PowerFunctionSpec spec;
  spec.mu_star = mu_star;
  spec.n_int = mpz_get_si(floor_val.get_mpz_t());
  spec.eta_star = shifted - BigRational(floor_val);
  spec.xi = xi;
  return spec;
}

namespace {

bool is_integer(const BigRational& v) { return v.get_den() == 1; }

long to_long(const BigRational& v) { return mpz_get_si(v.get_num().get_mpz_t()); }

// Exact value of Γ(g)/b^g for integer g ≥ 1.
BigRational gamma_over_pow_exact(const GammaOverPow& t) {
  const long g = to_long(t.gamma_arg);
  return BigRational(factorial(g - 1)) / pow_rational(t.pow_base, g);
}

Real eval_gamma_over_pow(const GammaOverPow& t, mpfr_prec_t w) {
  const Real g = gamma_rational(t.gamma_arg, w);
  const Real base = Real::from_rational(t.pow_base, w);
  const Real expo = Real::from_rational(t.gamma_arg, w);
  return g / pow(base, expo);
}

}  // namespace

Real eval_scaled_gamma(const RadicalScaled& scale, const GammaOverPow& factor, mpfr_prec_t target) {
  if (factor.gamma_arg <= 0 || factor.pow_base <= 0)
    throw std::domain_error("eval_scaled_gamma: gamma argument and power base must be positive");
  if (scale.is_zero()) return Real::from_long(0, target);
  if (is_integer(factor.gamma_arg)) {
    // Fully exact transcendental-free path (η* = 0 tables end up here).
    return to_real(scale * RadicalScaled::from_rational(gamma_over_pow_exact(factor)), target);
  }
  return correctly_rounded(target, 1UL << 13, [&](mpfr_prec_t w) {
    Real v = Real::from_rational(scale.rational(), w);
    if (!scale.is_rational()) {
      Real rad(w);
      mpfr_set_z(rad.raw(), scale.radicand().get_num().get_mpz_t(), MPFR_RNDN);
      v = v * sqrt(rad);
    }
    return v * eval_gamma_over_pow(factor, w);
  });
}

LtpCoeffExact ltp_coeff_exact(int alpha, int nu, const BigRational& eta_star, const BigRational& xi,
                              int mu_max) {
  if (mu_max < nu + 1) throw std::invalid_argument("ltp_coeff_exact: mu_max must be >= nu+1");
  if (eta_star < 0 || eta_star >= 1)
    throw std::invalid_argument("ltp_coeff_exact: eta_star must lie in [0, 1)");
  if (xi < 0) throw std::invalid_argument("ltp_coeff_exact: xi must be nonnegative");
  LtpCoeffExact table{alpha, nu, eta_star, xi,
                      GammaOverPow{eta_star + (nu - alpha + 3), 1 + xi},
                      {}};
  const BigRational base_arg = table.transcendental.gamma_arg;
  const BigRational one_plus_xi = 1 + xi;
  table.exact.reserve(static_cast<size_t>(mu_max - nu));
  for (int mu = nu + 1; mu <= mu_max; ++mu) {
    const ExactPolynomial& poly = ltp_poly(LtpIndices{alpha, mu, nu});
    // Σ_j Π̂_{μ,ν+j} · [Γ(η*+ν−α+3+j)/Γ(η*+ν−α+3)] / (1+ξ)^j, exact.
    BigRational sum(0);
    BigRational ladder(1);       // Γ(base+j)/Γ(base)
    BigRational xi_power(1);     // (1+ξ)^j
    for (int j = 0; j <= mu - nu - 1; ++j) {
      sum += poly.rational_coeff(nu + j) * ladder / xi_power;
      ladder *= base_arg + j;
      xi_power *= one_plus_xi;
    }
    sum *= pow_rational(BigRational(2 * mu), alpha);
    table.exact.emplace_back(sum, poly.radical().radicand());
  }
  return table;
}

GlpCoeffExact glp_coeff_exact(int nu, const BigRational& eta_star, const BigRational& xi,
                              int mu_max) {
  if (nu < 0 || mu_max < nu) throw std::invalid_argument("glp_coeff_exact: need mu_max >= nu >= 0");
  if (eta_star < 0 || eta_star >= 1)
    throw std::invalid_argument("glp_coeff_exact: eta_star must lie in [0, 1)");
  if (xi < 0) throw std::invalid_argument("glp_coeff_exact: xi must be nonnegative");
  GlpCoeffExact table{nu, eta_star, xi, GammaOverPow{eta_star + (nu + 1), 1 + xi}, {}};
  const BigRational base_arg = table.transcendental.gamma_arg;
  const BigRational one_plus_xi = 1 + xi;
  table.exact.reserve(static_cast<size_t>(mu_max - nu + 1));
  for (int mu = nu; mu <= mu_max; ++mu) {
    BigRational sum(0);
    BigRational ladder(1);
    BigRational xi_power(1);
    for (int s = 0; s <= mu - nu; ++s) {
      sum += BigRational(beta_coeff(GlpIndices{mu, nu}, s)) * ladder / xi_power;
      ladder *= base_arg + s;
      xi_power *= one_plus_xi;
    }
    sum *= BigRational(factorial(mu - nu)) / pow_rational(BigRational(factorial(mu)), 3);
    table.exact.push_back(std::move(sum));
  }
  return table;
}

ExpansionCoeffTable ltp_coeff_table(int alpha, int nu, const BigRational& eta_star,
                                    const BigRational& xi, int mu_max,
                                    const PrecisionContext& ctx) {
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, mu_max);
  ExpansionCoeffTable table{alpha, nu, eta_star, xi, {}, ctx};
  for (int mu = nu + 1; mu <= mu_max; ++mu)
    table.coefficients.emplace(
        mu, eval_scaled_gamma(exact.exact[static_cast<size_t>(mu - nu - 1)], exact.transcendental,
                              ctx.bits()));
  return table;
}

ExpansionCoeffTable glp_coeff_table(int nu, const BigRational& eta_star, const BigRational& xi,
                                    int mu_max, const PrecisionContext& ctx) {
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, mu_max);
  ExpansionCoeffTable table{std::nullopt, nu, eta_star, xi, {}, ctx};
  for (int mu = nu; mu <= mu_max; ++mu)
    table.coefficients.emplace(
        mu, eval_scaled_gamma(
                RadicalScaled::from_rational(exact.exact[static_cast<size_t>(mu - nu)]),
                exact.transcendental, ctx.bits()));
  return table;
}

namespace {

// Rational part of Q_μ(N): Σ_{s=ν+1}^N Â_s·Π̂_{sμ}·d_s, where Â_s is the
// rational part of the s-th exact A coefficient and d_s the shared radicand
// (the two √d_s factors multiply back to the integer d_s).
BigRational q_exact(const LtpCoeffExact& table, int mu, int N) {
  BigRational sum(0);
  for (int s = std::max(mu + 1, table.nu + 1); s <= N; ++s) {
    const ExactPolynomial& poly = ltp_poly(LtpIndices{table.alpha, s, table.nu});
    const RadicalScaled& a_part = table.exact[static_cast<size_t>(s - table.nu - 1)];
    sum += a_part.rational() * poly.rational_coeff(mu) * a_part.radicand();
  }
  return sum;
}

// Rational part of D_μ(N): Σ_{s=ν}^N B̂_s·β_{sμ}.
BigRational d_exact(const GlpCoeffExact& table, int mu, int N) {
  BigRational sum(0);
  for (int s = std::max(mu + table.nu, table.nu); s <= N; ++s)
    sum += table.exact[static_cast<size_t>(s - table.nu)] *
           BigRational(beta_coeff(GlpIndices{s, table.nu}, mu));
  return sum;
}

}  // namespace

RearrangedCoeffTable ltp_rearranged_table(int alpha, int nu, const BigRational& eta_star,
                                          const BigRational& xi, int N,
                                          const PrecisionContext& ctx) {
  if (N < nu + 1) throw std::invalid_argument("ltp_rearranged_table: N must be >= nu+1");
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, N);
  RearrangedCoeffTable table{alpha, nu, eta_star, xi, N, {}, ctx};
  for (int mu = nu; mu <= N - 1; ++mu)
    table.coefficients.emplace(
        mu, eval_scaled_gamma(RadicalScaled::from_rational(q_exact(exact, mu, N)),
                              exact.transcendental, ctx.bits()));
  return table;
}

RearrangedCoeffTable glp_rearranged_table(int nu, const BigRational& eta_star,
                                          const BigRational& xi, int N,
                                          const PrecisionContext& ctx) {
  if (N < nu) throw std::invalid_argument("glp_rearranged_table: N must be >= nu");
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, N);
  RearrangedCoeffTable table{std::nullopt, nu, eta_star, xi, N, {}, ctx};
  for (int mu = 0; mu <= N - nu; ++mu)
    table.coefficients.emplace(
        mu, eval_scaled_gamma(RadicalScaled::from_rational(d_exact(exact, mu, N)),
                              exact.transcendental, ctx.bits()));
  return table;
}

Real a_coeff(int alpha, int nu, int mu, const BigRational& eta_star, const BigRational& xi,
             const PrecisionContext& ctx) {
  if (mu < nu + 1) throw std::invalid_argument("a_coeff: mu must be >= nu+1");
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, mu);
  return eval_scaled_gamma(exact.exact.back(), exact.transcendental, ctx.bits());
}

Real b_coeff(int nu, int mu, const BigRational& eta_star, const BigRational& xi,
             const PrecisionContext& ctx) {
  if (mu < nu) throw std::invalid_argument("b_coeff: mu must be >= nu");
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, mu);
  return eval_scaled_gamma(RadicalScaled::from_rational(exact.exact.back()), exact.transcendental,
                           ctx.bits());
}

Real q_coeff(int alpha, int nu, int mu, const BigRational& eta_star, const BigRational& xi, int N,
             const PrecisionContext& ctx) {
  if (mu < nu || mu > N - 1) throw std::invalid_argument("q_coeff: need nu <= mu <= N-1");
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, N);
  return eval_scaled_gamma(RadicalScaled::from_rational(q_exact(exact, mu, N)),
                           exact.transcendental, ctx.bits());
}

Real d_coeff(int nu, int mu, const BigRational& eta_star, const BigRational& xi, int N,
             const PrecisionContext& ctx) {
  if (mu < 0 || mu > N - nu) throw std::invalid_argument("d_coeff: need 0 <= mu <= N-nu");
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, N);
  return eval_scaled_gamma(RadicalScaled::from_rational(d_exact(exact, mu, N)),
                           exact.transcendental, ctx.bits());
}

Real arranged_sum_ltp(int alpha, int nu, const BigRational& eta_star, const BigRational& xi, int N,
                      const BigRational& r, const PrecisionContext& ctx) {
  if (N < nu + 1) throw std::invalid_argument("arranged_sum_ltp: N must be >= nu+1");
  if (r < 0) throw std::invalid_argument("arranged_sum_ltp: r must be nonnegative");
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, N);
  // Σ_μ Â_μ·(Σ_s Π̂_{μs} r^s)·d_μ — the per-μ radicands square away exactly.
  BigRational total(0);
  for (int mu = nu + 1; mu <= N; ++mu) {
    const ExactPolynomial& poly = ltp_poly(LtpIndices{alpha, mu, nu});
    BigRational inner(0);
    BigRational r_power = pow_rational(r, nu);
    for (int s = nu; s <= mu - 1; ++s) {
      inner += poly.rational_coeff(s) * r_power;
      r_power *= r;
    }
    const RadicalScaled& a_part = exact.exact[static_cast<size_t>(mu - nu - 1)];
    total += a_part.rational() * inner * a_part.radicand();
  }
  return eval_scaled_gamma(RadicalScaled::from_rational(total), exact.transcendental, ctx.bits());
}

Real rearranged_sum_ltp(int alpha, int nu, const BigRational& eta_star, const BigRational& xi,
                        int N, const BigRational& r, const PrecisionContext& ctx) {
  if (N < nu + 1) throw std::invalid_argument("rearranged_sum_ltp: N must be >= nu+1");
  if (r < 0) throw std::invalid_argument("rearranged_sum_ltp: r must be nonnegative");
  const LtpCoeffExact exact = ltp_coeff_exact(alpha, nu, eta_star, xi, N);
  BigRational total(0);
  BigRational r_power = pow_rational(r, nu);
  for (int mu = nu; mu <= N - 1; ++mu) {
    total += q_exact(exact, mu, N) * r_power;
    r_power *= r;
  }
  return eval_scaled_gamma(RadicalScaled::from_rational(total), exact.transcendental, ctx.bits());
}

Real arranged_sum_glp(int nu, const BigRational& eta_star, const BigRational& xi, int N,
                      const BigRational& r, const PrecisionContext& ctx) {
  if (N < nu) throw std::invalid_argument("arranged_sum_glp: N must be >= nu");
  if (r < 0) throw std::invalid_argument("arranged_sum_glp: r must be nonnegative");
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, N);
  BigRational total(0);
  for (int mu = nu; mu <= N; ++mu) {
    BigRational inner(0);
    BigRational r_power(1);
    for (int s = 0; s <= mu - nu; ++s) {
      inner += BigRational(beta_coeff(GlpIndices{mu, nu}, s)) * r_power;
      r_power *= r;
    }
    total += exact.exact[static_cast<size_t>(mu - nu)] * inner;
  }
  return eval_scaled_gamma(RadicalScaled::from_rational(total), exact.transcendental, ctx.bits());
}

Real rearranged_sum_glp(int nu, const BigRational& eta_star, const BigRational& xi, int N,
                        const BigRational& r, const PrecisionContext& ctx) {
  if (N < nu) throw std::invalid_argument("rearranged_sum_glp: N must be >= nu");
  if (r < 0) throw std::invalid_argument("rearranged_sum_glp: r must be nonnegative");
  const GlpCoeffExact exact = glp_coeff_exact(nu, eta_star, xi, N);
  BigRational total(0);
  BigRational r_power(1);
  for (int mu = 0; mu <= N - nu; ++mu) {
    total += d_exact(exact, mu, N) * r_power;
    r_power *= r;
  }
  return eval_scaled_gamma(RadicalScaled::from_rational(total), exact.transcendental, ctx.bits());
}

Real target_function(const PowerFunctionSpec& spec, const BigRational& r,
                     const PrecisionContext& ctx) {
  if (r < 0) throw std::invalid_argument("target_function: r must be nonnegative");
  if (r == 0 && spec.mu_star < 1)
    throw std::invalid_argument("target_function: r = 0 requires mu_star >= 1");
  const mpfr_prec_t w = ctx.bits() + 64;
  const Real rv = Real::from_rational(r, w);
  const Real power = pow(rv, Real::from_rational(spec.mu_star - 1, w));
  const Real damping = exp(-Real::from_rational(spec.xi * r, w));
  return (power * damping).round_to(ctx.bits());
}

}  // namespace ltpoly
