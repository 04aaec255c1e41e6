#pragma once

/**
 * @file specfun.hpp
 * @brief Gamma, reciprocal Gamma, Pochhammer, sinc and real-order binomials.
 *
 * Every quantity that carries Gamma in a denominator is routed through
 * rgamma(), which is entire: it is exactly zero at the nonpositive integers
 * instead of producing inf/NaN. The order-integrals sample integer orders, so
 * this matters.
 *
 * Two routes to the binomial coefficient C(n, a) are kept side by side:
 *
 *     Gamma form:  n! / (Gamma(n+1-a) Gamma(1+a))
 *     trig form:   n! sin(pi a) / (pi a (1-a)_n)
 *
 * The trig form follows from the reflection formula
 * Gamma(1+a) Gamma(1-a) = pi a / sin(pi a) and Gamma(1-a+n) = (1-a)_n Gamma(1-a).
 * It has no Gamma overflow for large |a| but forms 0/0 at a = 1..n, so
 * gen_binom() switches to it only for |a| > n + 1.
 */

#include <cstdint>

namespace fracorder::specfun {

using Real = double;

/// Upper index n and real lower index alpha of C(n, alpha).
struct BinomSpec {
  unsigned n = 0;
  Real alpha = 0.0;
};

/// sin(pi x) with exact argument reduction; exactly 0 at integers.
Real sin_pi(Real x);

/// Euler Gamma. Exact for integers 1..171. Throws pole_error at nonpositive integers.
Real gamma(Real x);

/// 1/Gamma(x); exactly 0 at nonpositive integers.
Real rgamma(Real x);

/// sin(pi x)/(pi x), 1 at x = 0. Uses a Taylor branch for |x| < 1e-4.
Real sinc(Real x);

/// Rising factorial (z)_n = z (z+1) ... (z+n-1); (z)_0 = 1.
Real pochhammer(Real z, unsigned n);

/// n! as a Real (exact through 22!).
Real factorial(unsigned n);

/// C(n, alpha) for real alpha, switching between the two forms at |alpha| = n + 1.
Real gen_binom(unsigned n, Real alpha);
inline Real gen_binom(const BinomSpec& b) { return gen_binom(b.n, b.alpha); }

/// Gamma(n+1) rgamma(n+1-alpha) rgamma(1+alpha).
Real gen_binom_gamma_form(unsigned n, Real alpha);

/// n! sin(pi alpha) / (pi alpha (1-alpha)_n). Undefined (0/0) at alpha = 0..n.
Real gen_binom_trig_form(unsigned n, Real alpha);

}  // namespace fracorder::specfun
