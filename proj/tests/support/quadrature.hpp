// Independent quadrature oracle for the tests: ∫₀^∞ f(r) dr via the
// exp-sinh substitution r = exp((π/2)·sinh t), whose trapezoid sums converge
// doubly exponentially for the smooth, exponentially decaying integrands
// checked here.  Deliberately shares no code with the closed-form results it
// cross-validates.
#pragma once

#include <functional>
#include <stdexcept>

#include "ltpoly/numerics.hpp"

namespace ltpoly::testing {

// Integrates f over (0, ∞) at `work` bits, refining the trapezoid step
// h = 2^{-level} until two consecutive levels agree to 2^{-goal_bits}
// relative.  Outward terms are cut once they stop contributing at working
// precision.  Throws if the refinement budget is exhausted.
inline Real integrate_half_line(const std::function<Real(const Real&)>& f, mpfr_prec_t work,
                                long goal_bits) {
  Real half_pi(work);
  mpfr_const_pi(half_pi.raw(), MPFR_RNDN);
  half_pi = half_pi.mul_2exp(-1);

  const Real tiny = Real::from_long(1, work).mul_2exp(-(static_cast<long>(work) + 16));

  const auto term_at = [&](long j, long den) {
    BigRational t_rat(j, den);
    t_rat.canonicalize();
    const Real t = Real::from_rational(t_rat, work);
    Real sh(work);
    Real ch(work);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    const Real r = exp(half_pi * sh);
    return f(r) * half_pi * ch * r;
  };

  Real previous;  // NaN until the first level completes
  for (int level = 0; level <= 12; ++level) {
    const long den = 1L << level;
    Real sum = term_at(0, den);
    for (const long direction : {1L, -1L}) {
      int quiet = 0;
      for (long j = 1; j <= 400 * den; ++j) {
        const Real term = term_at(direction * j, den);
        sum = sum + term;
        if (abs(term) <= tiny * abs(sum)) {
          if (++quiet >= 3 && j >= 4 * den) break;
        } else {
          quiet = 0;
        }
      }
    }
    const Real estimate = sum / Real::from_long(den, work);
    if (!previous.is_nan()) {
      const Real diff = abs(estimate - previous);
      if (diff <= abs(estimate).mul_2exp(-goal_bits)) return estimate;
    }
    previous = estimate;
  }
  throw std::runtime_error("integrate_half_line: refinement budget exhausted");
}

}  // namespace ltpoly::testing
