#include "ltpoly/laguerre.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ltpoly {

void LtpIndices::validate() const {
  if (alpha > 2) throw std::invalid_argument("LtpIndices: alpha must be <= 2");
  if (n < 1) throw std::invalid_argument("LtpIndices: n must be >= 1");
  if (l < 0 || l > n - 1) throw std::invalid_argument("LtpIndices: l must satisfy 0 <= l <= n-1");
}

void GlpIndices::validate() const {
  if (nu < 0 || mu < nu) throw std::invalid_argument("GlpIndices: need mu >= nu >= 0");
}

void RadialScale::validate() const {
  if (zeta <= 0) throw std::invalid_argument("RadialScale: zeta must be positive");
}

BigInt binom_F(long m, long n) {
  if (n < 0) throw std::domain_error("binom_F: n must be nonnegative");
  if (m < 0 || m > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return out;
}

namespace {

// Normalization bracket of the 𝓛 family: √[(q−p)!/((2n)^α q!)].
RadicalScaled ltp_norm_radical(const LtpIndices& idx) {
  BigRational radicand(factorial(idx.q() - idx.p()));
  radicand /= BigRational(factorial(idx.q()));
  radicand *= pow_rational(BigRational(2 * idx.n), -static_cast<long>(idx.alpha));
  return RadicalScaled(BigRational(1), radicand);
}

template <typename Key, typename Builder>
const ExactPolynomial& memoized(std::map<Key, std::unique_ptr<const ExactPolynomial>>& cache,
                                std::mutex& mutex, const Key& key, Builder&& build) {
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const ExactPolynomial>(build())).first;
  return *it->second;
}

}  // namespace

RadicalScaled pi_coeff(const LtpIndices& idx, long k) {
  idx.validate();
  if (k < idx.l || k > idx.n - 1) return RadicalScaled();
  const long j = k - idx.l;  // power above the x^l floor
  BigRational rational(binom_F(idx.p() + j, idx.q()));
  rational /= BigRational(factorial(j));
  if (j % 2 == 1) rational = -rational;
  return ltp_norm_radical(idx) * RadicalScaled::from_rational(rational);
}

const ExactPolynomial& ltp_poly(const LtpIndices& idx) {
  idx.validate();
  static std::map<std::tuple<int, int, int>, std::unique_ptr<const ExactPolynomial>> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, std::make_tuple(idx.alpha, idx.n, idx.l), [&idx] {
    std::vector<BigRational> coeffs;
    coeffs.reserve(static_cast<size_t>(idx.n - idx.l));
    for (long j = 0; j < idx.n - idx.l; ++j) {
      BigRational c(binom_F(idx.p() + j, idx.q()));
      c /= BigRational(factorial(j));
      if (j % 2 == 1) c = -c;
      coeffs.push_back(std::move(c));
    }
    return ExactPolynomial(idx.l, std::move(coeffs), ltp_norm_radical(idx));
  });
}

ExactPolynomial ltp_weighted_poly(const LtpIndices& idx) {
  idx.validate();
  const BigRational weight = pow_rational(BigRational(2 * idx.n), idx.alpha);
  return ltp_poly(idx).scaled(weight).times_x_power(-static_cast<long>(idx.alpha));
}

BigInt beta_coeff(const GlpIndices& g, long s) {
  g.validate();
  if (s < 0 || s > g.mu - g.nu) return BigInt(0);
  BigInt out = factorial(g.mu - s) * binom_F(s, g.mu) * binom_F(g.nu + s, g.mu);
  if ((g.nu + s) % 2 == 1) out = -out;
  return out;
}

const ExactPolynomial& glp_nonstandard(const GlpIndices& g) {
  g.validate();
  static std::map<std::pair<int, int>, std::unique_ptr<const ExactPolynomial>> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, std::make_pair(g.mu, g.nu), [&g] {
    std::vector<BigRational> coeffs;
    coeffs.reserve(static_cast<size_t>(g.mu - g.nu + 1));
    for (long s = 0; s <= g.mu - g.nu; ++s) coeffs.emplace_back(beta_coeff(g, s));
    return ExactPolynomial(0, std::move(coeffs));
  });
}

ExactPolynomial glp_standard(long degree, long order) {
  if (degree < 0 || order < 0)
    throw std::invalid_argument("glp_standard: degree and order must be nonnegative");
  std::vector<BigRational> coeffs;
  coeffs.reserve(static_cast<size_t>(degree + 1));
  for (long k = 0; k <= degree; ++k) {
    BigRational c(binom_F(degree - k, degree + order));
    c /= BigRational(factorial(k));
    if (k % 2 == 1) c = -c;
    coeffs.push_back(std::move(c));
  }
  return ExactPolynomial(0, std::move(coeffs));
}

ExactPolynomial ltp_standard_convention(const LtpIndices& idx) {
  idx.validate();
  // N^α_{nl} = (−1)^α √[(q−p)!/((2n)^α (q!)³)], the unique normalization under
  // which this route reproduces the direct coefficient construction.
  BigRational radicand(factorial(idx.q() - idx.p()));
  radicand /= pow_rational(BigRational(factorial(idx.q())), 3);
  radicand *= pow_rational(BigRational(2 * idx.n), -static_cast<long>(idx.alpha));
  const BigRational sign(idx.alpha % 2 == 0 ? 1 : -1);
  const RadicalScaled norm(sign, radicand);
  const GlpIndices g{static_cast<int>(idx.q()), static_cast<int>(idx.p())};
  return glp_nonstandard(g).times_x_power(idx.l).scaled(norm);
}

Real eval_poly(const ExactPolynomial& poly, const Real& x, const PrecisionContext& ctx) {
  return poly.eval(x, ctx);
}

namespace {

// Shared radial-function core: (2ζ)^{3/2} e^{−x/2} P(x) at x = 2ζr.
Real radial_eval(const ExactPolynomial& poly, const RadialScale& scale, const Real& r,
                 const PrecisionContext& ctx) {
  scale.validate();
  const PrecisionContext work(ctx.bits() + 64);
  const BigRational two_zeta = 2 * scale.zeta;
  const Real x = Real::from_rational(two_zeta, work.bits()) * r.round_to(work.bits());
  // (2ζ)^{3/2} = 2ζ·√(2ζ), exact as a radical-scaled rational.
  const Real amplitude = to_real(RadicalScaled(two_zeta, two_zeta), work.bits());
  const Real damping = exp(-(x.mul_2exp(-1)));
  return (amplitude * damping * poly.eval(x, work)).round_to(ctx.bits());
}

}  // namespace

Real radial_R(const LtpIndices& idx, const RadialScale& scale, const Real& r,
              const PrecisionContext& ctx) {
  idx.validate();
  if (r.sign() < 0) throw std::domain_error("radial_R: r must be nonnegative");
  return radial_eval(ltp_poly(idx), scale, r, ctx);
}

Real radial_R_weighted(const LtpIndices& idx, const RadialScale& scale, const Real& r,
                       const PrecisionContext& ctx) {
  idx.validate();
  if (r.sign() < 0) throw std::domain_error("radial_R_weighted: r must be nonnegative");
  if (r.is_zero() && idx.alpha > 0)
    throw std::domain_error("radial_R_weighted: r = 0 is singular for alpha > 0");
  return radial_eval(ltp_weighted_poly(idx), scale, r, ctx);
}

}  // namespace ltpoly
