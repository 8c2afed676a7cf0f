#include "ltpoly/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace ltpoly {

namespace {
const RadicalScaled& radical_one() {
  static const RadicalScaled one = RadicalScaled::from_rational(BigRational(1));
  return one;
}
}  // namespace

ExactPolynomial::ExactPolynomial() : offset_(0), radical_(radical_one()) {}

ExactPolynomial::ExactPolynomial(long offset, std::vector<BigRational> coeffs, RadicalScaled radical)
    : offset_(offset), coeffs_(std::move(coeffs)), radical_(std::move(radical)) {
  if (radical_.is_zero()) coeffs_.clear();
  // Fold the radical's rational part into the coefficients so the stored
  // radical is a pure √d and representations are canonical.
  if (!radical_.is_zero() && radical_.rational() != 1) {
    for (auto& c : coeffs_) c *= radical_.rational();
  }
  radical_ = RadicalScaled(BigRational(1), radical_.radicand());
  size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  size_t last = coeffs_.size();
  while (last > first && coeffs_[last - 1] == 0) --last;
  offset_ += static_cast<long>(first);
  coeffs_.assign(coeffs_.begin() + static_cast<long>(first), coeffs_.begin() + static_cast<long>(last));
  if (coeffs_.empty()) {
    offset_ = 0;
    radical_ = radical_one();
  }
}

ExactPolynomial ExactPolynomial::constant(BigRational value) {
  return ExactPolynomial(0, {std::move(value)});
}

long ExactPolynomial::offset() const {
  if (is_zero()) throw std::domain_error("ExactPolynomial: zero polynomial has no offset");
  return offset_;
}

long ExactPolynomial::degree() const {
  if (is_zero()) throw std::domain_error("ExactPolynomial: zero polynomial has no degree");
  return offset_ + static_cast<long>(coeffs_.size()) - 1;
}

BigRational ExactPolynomial::rational_coeff(long power) const {
  const long i = power - offset_;
  if (is_zero() || i < 0 || i >= static_cast<long>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<size_t>(i)];
}

RadicalScaled ExactPolynomial::coeff(long power) const {
  return RadicalScaled(rational_coeff(power), radical_.radicand());
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (is_zero()) return ExactPolynomial();
  std::vector<BigRational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = coeffs_[i] * BigRational(offset_ + static_cast<long>(i));
  return ExactPolynomial(offset_ - 1, std::move(out), radical_);
}

ExactPolynomial ExactPolynomial::times_x_power(long k) const {
  if (is_zero()) return ExactPolynomial();
  return ExactPolynomial(offset_ + k, coeffs_, radical_);
}

ExactPolynomial ExactPolynomial::scaled(const BigRational& factor) const {
  if (is_zero() || factor == 0) return ExactPolynomial();
  std::vector<BigRational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * factor;
  return ExactPolynomial(offset_, std::move(out), radical_);
}

ExactPolynomial ExactPolynomial::scaled(const RadicalScaled& factor) const {
  if (is_zero() || factor.is_zero()) return ExactPolynomial();
  return ExactPolynomial(offset_, coeffs_, radical_ * factor);
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.radical_ == b.radical_))
    throw std::domain_error("ExactPolynomial: sum of polynomials with distinct radical factors");
  const long lo = std::min(a.offset_, b.offset_);
  const long hi = std::max(a.offset_ + static_cast<long>(a.coeffs_.size()),
                           b.offset_ + static_cast<long>(b.coeffs_.size()));
  std::vector<BigRational> out(static_cast<size_t>(hi - lo), BigRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    out[static_cast<size_t>(a.offset_ - lo) + i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i)
    out[static_cast<size_t>(b.offset_ - lo) + i] += b.coeffs_[i];
  return ExactPolynomial(lo, std::move(out), a.radical_);
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a + b.scaled(BigRational(-1));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ExactPolynomial();
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(a.offset_ + b.offset_, std::move(out), a.radical_ * b.radical_);
}

bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a.offset_ == b.offset_ && a.radical_ == b.radical_ && a.coeffs_ == b.coeffs_;
}

Real ExactPolynomial::eval(const Real& x, const PrecisionContext& ctx) const {
  if (is_zero()) return Real::from_long(0, ctx.bits());
  if (x.is_zero() && offset_ < 0)
    throw std::domain_error("ExactPolynomial: evaluation at x = 0 with negative offset");
  const mpfr_prec_t w = ctx.bits() + 64;
  const Real xw = x.round_to(w);
  Real acc = Real::from_rational(coeffs_.back(), w);
  for (size_t i = coeffs_.size() - 1; i-- > 0;)
    acc = acc * xw + Real::from_rational(coeffs_[i], w);
  if (offset_ != 0) acc = acc * xw.pow_si(offset_);
  if (!radical_.is_rational()) {
    Real rad(w);
    mpfr_set_z(rad.raw(), radical_.radicand().get_num().get_mpz_t(), MPFR_RNDN);
    acc = acc * sqrt(rad);
  }
  return acc.round_to(ctx.bits());
}

}  // namespace ltpoly
