#include "ltpoly/analytic_checks.hpp"

#include <stdexcept>

namespace ltpoly {

namespace {

// ∫₀^∞ e^{−x} x² P(x) dx = Σ_k c_k (k+2)!, exact.  Requires every power
// k+2 ≥ 0, i.e. P's offset ≥ −2.
RadicalScaled weighted_moment_integral(const ExactPolynomial& product) {
  if (product.is_zero()) return RadicalScaled();
  if (product.offset() + 2 < 0)
    throw std::domain_error("weighted_inner: integrand power below -2 is not integrable");
  BigRational sum(0);
  for (long k = product.offset(); k <= product.degree(); ++k)
    sum += product.rational_coeff(k) * BigRational(factorial(k + 2));
  return RadicalScaled(sum, product.radical().radicand());
}

InnerProductResult inner_with_weight_on(int alpha, int l, int n, int n_prime, bool weight_on_first) {
  const LtpIndices a{alpha, n, l};
  const LtpIndices b{alpha, n_prime, l};
  a.validate();
  b.validate();
  const ExactPolynomial product = weight_on_first
                                      ? ltp_weighted_poly(a) * ltp_poly(b)
                                      : ltp_poly(a) * ltp_weighted_poly(b);
  return InnerProductResult{weighted_moment_integral(product), n == n_prime ? 1 : 0};
}

}  // namespace

InnerProductResult weighted_inner(int alpha, int l, int n, int n_prime) {
  return inner_with_weight_on(alpha, l, n, n_prime, false);
}

InnerProductResult weighted_inner_weight_first(int alpha, int l, int n, int n_prime) {
  return inner_with_weight_on(alpha, l, n, n_prime, true);
}

std::vector<Real> completeness_projection(int alpha, int l, int N, int m,
                                          const std::vector<Real>& x_points,
                                          const PrecisionContext& ctx) {
  if (m < l + 1 || N < l + 1)
    throw std::invalid_argument("completeness_projection: need m >= l+1 and N >= l+1");
  const auto rho = [&](int principal, const Real& x) {
    const LtpIndices idx{alpha, principal, l};
    return exp(-(x.mul_2exp(-1))) * ltp_poly(idx).eval(x, ctx);
  };
  // The x' integral of ρ̄_n·ρ_m against x'² is the exact weighted inner
  // product, so the kernel application reduces to Σ_n ρ_n(x)·<n|m>.
  std::vector<Real> projector_weights;
  projector_weights.reserve(static_cast<size_t>(N - l));
  for (int n = l + 1; n <= N; ++n)
    projector_weights.push_back(to_real(weighted_inner(alpha, l, n, m).value, ctx.bits()));

  std::vector<Real> residuals;
  residuals.reserve(x_points.size());
  for (const Real& x : x_points) {
    Real acc = Real::from_long(0, ctx.bits());
    for (int n = l + 1; n <= N; ++n)
      acc = acc + rho(n, x) * projector_weights[static_cast<size_t>(n - l - 1)];
    residuals.push_back(acc - rho(m, x));
  }
  return residuals;
}

Real ode_residual_glp(const GlpIndices& g, const Real& x, const PrecisionContext& ctx) {
  g.validate();
  if (x.sign() <= 0) throw std::domain_error("ode_residual_glp: x must be positive");
  const PrecisionContext work(ctx.bits() + 64);
  const ExactPolynomial& L = glp_nonstandard(g);
  const ExactPolynomial dL = L.derivative();
  const Real xv = x.round_to(work.bits());
  const Real term2 = (Real::from_long(g.nu + 1, work.bits()) - xv) * dL.eval(xv, work);
  const Real term3 = Real::from_long(g.mu - g.nu, work.bits()) * L.eval(xv, work);
  return (xv * dL.derivative().eval(xv, work) + term2 + term3).round_to(ctx.bits());
}

ExactPolynomial ode_residual_glp_poly(const GlpIndices& g) {
  g.validate();
  const ExactPolynomial x_poly(1, {BigRational(1)});
  const ExactPolynomial& L = glp_nonstandard(g);
  const ExactPolynomial dL = L.derivative();
  return x_poly * dL.derivative() + dL.scaled(BigRational(g.nu + 1)) - x_poly * dL +
         L.scaled(BigRational(g.mu - g.nu));
}

Real ode_residual_ltp(const LtpIndices& idx, const Real& x, const PrecisionContext& ctx) {
  idx.validate();
  if (x.sign() <= 0) throw std::domain_error("ode_residual_ltp: x must be positive");
  const PrecisionContext work(ctx.bits() + 64);
  const ExactPolynomial& L = ltp_poly(idx);
  const ExactPolynomial dL = L.derivative();
  const Real xv = x.round_to(work.bits());
  const Real drift = (Real::from_long(3 - idx.alpha, work.bits()) - xv) * dL.eval(xv, work);
  const BigRational centrifugal(static_cast<long>(idx.l) * (idx.l + 1) +
                                static_cast<long>(idx.l) * (1 - idx.alpha));
  const Real bracket = Real::from_long(1 - idx.n, work.bits()) +
                       Real::from_rational(centrifugal, work.bits()) / xv;
  return (xv * dL.derivative().eval(xv, work) + drift - bracket * L.eval(xv, work))
      .round_to(ctx.bits());
}

ExactPolynomial ode_residual_ltp_poly(const LtpIndices& idx) {
  idx.validate();
  // Residual multiplied through by x, so the 1/x centrifugal term stays
  // polynomial:  x²𝓛'' + x(3−α−x)𝓛' − [(1−n)x + l(l+1) + l(1−α)]𝓛.
  const ExactPolynomial x_poly(1, {BigRational(1)});
  const ExactPolynomial x_sq(2, {BigRational(1)});
  const ExactPolynomial& L = ltp_poly(idx);
  const ExactPolynomial dL = L.derivative();
  const BigRational centrifugal(static_cast<long>(idx.l) * (idx.l + 1) +
                                static_cast<long>(idx.l) * (1 - idx.alpha));
  const ExactPolynomial bracket =
      x_poly.scaled(BigRational(1 - idx.n)) + ExactPolynomial::constant(centrifugal);
  return x_sq * dL.derivative() + x_poly.scaled(BigRational(3 - idx.alpha)) * dL - x_sq * dL -
         bracket * L;
}

ExactPolynomial derivative_shift_check(const GlpIndices& g, int k) {
  g.validate();
  if (k < 1) throw std::invalid_argument("derivative_shift_check: k must be positive");
  if (g.nu + k > g.mu)
    throw std::invalid_argument("derivative_shift_check: shift target exceeds degree index");
  ExactPolynomial d = glp_nonstandard(g);
  for (int i = 0; i < k; ++i) d = d.derivative();
  return d - glp_nonstandard(GlpIndices{g.mu, g.nu + k});
}

std::pair<Real, Real> frictional_both_routes(const LtpIndices& idx, const RadialScale& scale,
                                             const Real& r, const PrecisionContext& ctx) {
  idx.validate();
  scale.validate();
  if (r.sign() <= 0) throw std::domain_error("potentials: r must be positive");
  const Real zero = Real::from_long(0, ctx.bits());
  // (1−α) = 0 kills the frictional term outright; n = l+1 makes 𝓛 a pure
  // monomial, whose logarithmic derivative cancels l/x exactly (equivalently
  // L_q^{p+1} is the empty polynomial).
  if (idx.alpha == 1 || idx.n == idx.l + 1) return {zero, zero};

  const PrecisionContext work(ctx.bits() + 96);
  const Real x = Real::from_rational(2 * scale.zeta, work.bits()) * r.round_to(work.bits());
  const BigRational strength = -2 * scale.zeta * scale.zeta * BigRational(1 - idx.alpha);
  const Real prefactor = Real::from_rational(strength, work.bits()) / x;

  const ExactPolynomial& L = ltp_poly(idx);
  const Real denom_ltp = L.eval(x, work);
  if (denom_ltp.is_zero())
    throw std::domain_error("potentials: evaluation at a node of the polynomial is singular");
  const Real log_deriv = L.derivative().eval(x, work) / denom_ltp;
  const Real route_a = prefactor * (log_deriv - Real::from_long(idx.l, work.bits()) / x);

  const GlpIndices base{static_cast<int>(idx.q()), static_cast<int>(idx.p())};
  const GlpIndices shifted{base.mu, base.nu + 1};
  const Real denom_glp = glp_nonstandard(base).eval(x, work);
  if (denom_glp.is_zero())
    throw std::domain_error("potentials: evaluation at a node of the polynomial is singular");
  const Real route_b = prefactor * (glp_nonstandard(shifted).eval(x, work) / denom_glp);

  return {route_a.round_to(ctx.bits()), route_b.round_to(ctx.bits())};
}

PotentialDecomposition potentials(const LtpIndices& idx, const RadialScale& scale, const Real& r,
                                  const PrecisionContext& ctx) {
  const auto [route_a, route_b] = frictional_both_routes(idx, scale, r, ctx);
  if (ulp_distance(route_a, route_b) > 8.0)
    throw std::logic_error("potentials: frictional-term routes disagree beyond 8 ulp");
  const PrecisionContext work(ctx.bits() + 64);
  const Real x = Real::from_rational(2 * scale.zeta, work.bits()) * r.round_to(work.bits());
  const Real core =
      (Real::from_rational(-2 * scale.zeta * scale.zeta * idx.n, work.bits()) / x)
          .round_to(ctx.bits());
  PotentialDecomposition out{core, route_a, core + route_a,
                             Real::from_rational(-scale.zeta * scale.zeta / 2, ctx.bits())};
  return out;
}

}  // namespace ltpoly
