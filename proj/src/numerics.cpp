#include "ltpoly/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ltpoly {

namespace {

// Primes up to this bound are removed when extracting square factors; every
// radicand built from the factorial/binomial formulas here factors completely
// over them.
constexpr unsigned long kPrimeBound = 10000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kPrimeBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kPrimeBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long m = p * p; m <= kPrimeBound; m += p) composite[m] = true;
    }
    return out;
  }();
  return primes;
}

long ceil_log2(unsigned long k) {
  long bits = 0;
  unsigned long v = 1;
  while (v < k) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigRational pow_rational(const BigRational& base, long exp) {
  if (exp == 0) return BigRational(1);
  if (base == 0 && exp < 0) throw std::domain_error("pow_rational: zero base, negative exponent");
  BigRational out;
  const unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), mag);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), mag);
  out.canonicalize();
  if (exp < 0) out = BigRational(1) / out;
  return out;
}

BigRational rational_from_decimal(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("rational_from_decimal: malformed decimal '" + std::string(text) + "'");
  };
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = (text[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
  const bool had_int = !digits.empty();
  if (i < text.size() && text[i] == '.') {
    ++i;
    const size_t before = digits.size();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
    frac_len = static_cast<long>(digits.size() - before);
    if (!had_int && frac_len == 0) fail();
  } else if (!had_int) {
    fail();
  }
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = (text[i] == '-');
      ++i;
    }
    if (i == text.size()) fail();
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) fail();
      ++i;
    }
    exp10 = exp_neg ? -v : v;
  }
  if (i != text.size()) fail();
  if (digits.empty()) fail();

  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  BigRational value(mantissa);
  const long shift = exp10 - frac_len;
  if (shift != 0) {
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift > 0)
      value *= BigRational(p10);
    else
      value /= BigRational(p10);
  }
  value.canonicalize();
  return value;
}

SquareSplit extract_square(const BigInt& n) {
  if (n < 0) throw std::domain_error("extract_square: negative argument");
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt root(1), squarefree(1), rest(n);
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    BigInt reduced;
    const mp_bitcnt_t mult = mpz_remove(reduced.get_mpz_t(), rest.get_mpz_t(), BigInt(p).get_mpz_t());
    if (mult == 0) continue;
    rest = reduced;
    if (mult >= 2) {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, mult / 2);
      root *= pk;
    }
    if (mult % 2 == 1) squarefree *= p;
  }
  if (rest != 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
    } else {
      // Cofactor has no square divisor with both primes ≤ kPrimeBound; any
      // residual square factor would need a prime > 10^4 squared, which the
      // factorial-structured inputs in scope cannot produce.
      squarefree *= rest;
    }
  }
  return {root, squarefree};
}

RadicalScaled::RadicalScaled() : rational_(0), radicand_(1) {}

RadicalScaled::RadicalScaled(BigRational rational, BigRational radicand) {
  rational.canonicalize();
  radicand.canonicalize();
  if (radicand < 0) throw std::domain_error("RadicalScaled: negative radicand");
  if (rational == 0 || radicand == 0) {
    rational_ = 0;
    radicand_ = 1;
    return;
  }
  // √(a/b) = √(a·b)/b, then pull the square part of a·b out front.
  const BigInt den(radicand.get_den());
  BigInt ab = BigInt(radicand.get_num()) * den;
  auto split = extract_square(ab);
  rational_ = rational * BigRational(split.root) / BigRational(den);
  rational_.canonicalize();
  radicand_ = BigRational(split.squarefree);
}

RadicalScaled RadicalScaled::from_rational(BigRational value) {
  RadicalScaled out;
  value.canonicalize();
  out.rational_ = std::move(value);
  out.radicand_ = 1;
  return out;
}

bool RadicalScaled::is_zero() const { return rational_ == 0; }

bool RadicalScaled::is_rational() const { return radicand_ == 1; }

const BigRational& RadicalScaled::rational_value() const {
  if (!is_rational()) throw std::domain_error("RadicalScaled: irrational value");
  return rational_;
}

RadicalScaled RadicalScaled::operator-() const {
  RadicalScaled out;
  out.rational_ = -rational_;
  out.radicand_ = radicand_;
  if (out.rational_ == 0) out.radicand_ = 1;
  return out;
}

RadicalScaled operator*(const RadicalScaled& a, const RadicalScaled& b) {
  if (a.is_zero() || b.is_zero()) return RadicalScaled();
  // Both radicands are squarefree integers, so their product's square part
  // is exactly gcd², and the cofactors stay squarefree.
  const BigInt da(a.radicand_.get_num());
  const BigInt db(b.radicand_.get_num());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  RadicalScaled out;
  out.rational_ = a.rational_ * b.rational_ * BigRational(g);
  out.rational_.canonicalize();
  out.radicand_ = BigRational((da / g) * (db / g));
  return out;
}

RadicalScaled operator+(const RadicalScaled& a, const RadicalScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_)
    throw std::domain_error("RadicalScaled: sum of values with distinct radicands");
  RadicalScaled out;
  out.rational_ = a.rational_ + b.rational_;
  out.radicand_ = out.rational_ == 0 ? BigRational(1) : a.radicand_;
  return out;
}

RadicalScaled operator-(const RadicalScaled& a, const RadicalScaled& b) { return a + (-b); }

bool operator==(const RadicalScaled& a, const RadicalScaled& b) {
  return a.rational_ == b.rational_ && a.radicand_ == b.radicand_;
}

RadicalScaled radical_mul(const RadicalScaled& a, const RadicalScaled& b) { return a * b; }

Real to_real(const RadicalScaled& value, mpfr_prec_t prec) {
  if (value.is_zero()) return Real::from_long(0, prec);
  if (value.is_rational()) return Real::from_rational(value.rational(), prec);
  return correctly_rounded(prec, 4, [&value](mpfr_prec_t w) {
    Real rad(w);
    mpfr_set_z(rad.raw(), value.radicand().get_num().get_mpz_t(), MPFR_RNDN);
    return Real::from_rational(value.rational(), w) * sqrt(rad);
  });
}

PrecisionContext::PrecisionContext(long mantissa_bits) : bits_(mantissa_bits) {
  if (mantissa_bits < 64) throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 64");
}

Real::Real() : Real(mpfr_prec_t(64)) {}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_nan(value_);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_long(long value, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set_si(out.value_, value, MPFR_RNDN);
  return out;
}

Real Real::from_rational(const BigRational& value, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real Real::from_decimal(std::string_view text, mpfr_prec_t prec) {
  return from_rational(rational_from_decimal(text), prec);
}

mpfr_prec_t Real::precision() const { return mpfr_get_prec(value_); }

Real Real::round_to(mpfr_prec_t prec) const {
  Real out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

bool Real::is_nan() const { return mpfr_nan_p(value_) != 0; }

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }

int Real::sign() const { return mpfr_sgn(value_); }

namespace {
mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  const int c = mpfr_cmp(a.raw(), b.raw());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Real abs(const Real& a) {
  Real out(a.precision());
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& a) {
  Real out(a.precision());
  mpfr_sqrt(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real exp(const Real& a) {
  Real out(a.precision());
  mpfr_exp(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real log(const Real& a) {
  Real out(a.precision());
  mpfr_log(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(wider(base, exponent));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

Real Real::mul_2exp(long k) const {
  Real out(precision());
  mpfr_mul_2si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

Real Real::pow_si(long k) const {
  Real out(precision());
  mpfr_pow_si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

std::string Real::sci_string() const {
  // ceil(prec·log10 2) + 2 significant digits round-trips any binary value.
  const long digits = static_cast<long>(std::ceil(static_cast<double>(precision()) * 0.30102999566398)) + 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::parse_sci(std::string_view text, mpfr_prec_t prec) {
  Real out(prec);
  const std::string owned(text);
  if (mpfr_set_str(out.value_, owned.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::parse_sci: malformed number '" + owned + "'");
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double ulp_distance(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::numeric_limits<double>::infinity();
  if (mpfr_equal_p(a.raw(), b.raw())) return 0.0;
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  mpfr_t diff;
  mpfr_init2(diff, prec + 64);
  mpfr_sub(diff, a.raw(), b.raw(), MPFR_RNDN);
  mpfr_abs(diff, diff, MPFR_RNDN);
  mpfr_exp_t e;
  if (a.is_zero())
    e = mpfr_get_exp(b.raw());
  else if (b.is_zero())
    e = mpfr_get_exp(a.raw());
  else
    e = std::max(mpfr_get_exp(a.raw()), mpfr_get_exp(b.raw()));
  // One ulp at the larger binade is 2^(e − prec).
  mpfr_mul_2si(diff, diff, static_cast<long>(prec - e), MPFR_RNDN);
  const double out = mpfr_get_d(diff, MPFR_RNDU);
  mpfr_clear(diff);
  return out;
}

Real gamma(const Real& a, const PrecisionContext& ctx) {
  if (a.is_nan() || a.sign() <= 0) throw std::domain_error("gamma: argument must be positive");
  if (mpfr_cmp_ui(a.raw(), 1000000) > 0) throw std::domain_error("gamma: argument out of supported range");
  const mpfr_prec_t w = ctx.bits() + 48;
  Real f = a.round_to(w);
  Real result(w);
  if (mpfr_cmp_ui(a.raw(), 1) < 0) {
    // Γ(a) = Γ(a+1)/a with a+1 ∈ (1, 2).
    Real shifted = f + Real::from_long(1, w);
    mpfr_gamma(result.raw(), shifted.raw(), MPFR_RNDN);
    result = result / f;
    return result.round_to(ctx.bits());
  }
  // Reduce to f ∈ [1, 2): Γ(a) = Γ(f)·∏_{j=0}^{k−1}(f+j).
  long k = 0;
  {
    mpfr_t fl;
    mpfr_init2(fl, w);
    mpfr_floor(fl, a.raw());
    k = mpfr_get_si(fl, MPFR_RNDN) - 1;
    mpfr_clear(fl);
    if (k < 0) k = 0;
  }
  f = f - Real::from_long(k, w);
  mpfr_gamma(result.raw(), f.raw(), MPFR_RNDN);
  for (long j = 0; j < k; ++j) result = result * (f + Real::from_long(j, w));
  return result.round_to(ctx.bits());
}

Real gamma_rational(const BigRational& a, mpfr_prec_t working_prec) {
  if (a <= 0) throw std::domain_error("gamma_rational: argument must be positive");
  if (a.get_den() == 1) {
    // Γ(n) = (n−1)!, exact.
    const long n = static_cast<long>(mpz_get_si(a.get_num().get_mpz_t()));
    return Real::from_rational(BigRational(factorial(n - 1)), working_prec);
  }
  // Exact reduction to f ∈ [1, 2): the ladder is a rational computed in exact
  // arithmetic, so only Γ(f) itself carries rounding error.
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  long k = static_cast<long>(mpz_get_si(fl.get_mpz_t())) - 1;
  BigRational f = a;
  BigRational ladder(1);
  if (k > 0) {
    f = a - BigRational(k);
    for (long j = 0; j < k; ++j) ladder *= f + BigRational(j);
  } else if (k < 0) {
    // a ∈ (0, 1): Γ(a) = Γ(a+1)/a.
    f = a + 1;
    ladder = BigRational(1) / a;
  }
  Real x = Real::from_rational(f, working_prec);
  Real g(working_prec);
  mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
  return g * Real::from_rational(ladder, working_prec);
}

Real correctly_rounded(mpfr_prec_t target, unsigned long max_err_ulps,
                       const std::function<Real(mpfr_prec_t)>& recompute) {
  const long kbits = ceil_log2(std::max<unsigned long>(max_err_ulps, 1));
  for (mpfr_prec_t extra = 64; extra <= 4096; extra *= 2) {
    const mpfr_prec_t w = target + kbits + extra;
    Real v = recompute(w);
    if (v.is_nan()) throw std::logic_error("correctly_rounded: recompute produced NaN");
    // Recompute functions yield exact zeros only for exactly-zero values.
    if (v.is_zero()) return v.round_to(target);
    if (mpfr_can_round(v.raw(), w - kbits - 2, MPFR_RNDN, MPFR_RNDN, target)) return v.round_to(target);
  }
  // Only reachable if the true value sits essentially on a rounding boundary;
  // fall back to the widest computation, faithfully rounded.
  return recompute(target + kbits + 8192).round_to(target);
}

}  // namespace ltpoly
