#pragma once

/**
 * @file frac.hpp
 * @brief Left-sided Riemann-Liouville operators with lower limit a.
 *
 *     J^alpha f(t) = 1/Gamma(alpha) int_a^t (t - tau)^(alpha-1) f(tau) dtau
 *     D^alpha f(t) = d^m/dt^m J^(m-alpha) f(t),   m - 1 < alpha < m
 *
 * On shifted powers the derivative has the closed form
 *
 *     D^alpha (t-a)^(beta-1) = Gamma(beta)/Gamma(beta-alpha) (t-a)^(beta-alpha-1)
 *
 * which is used here for every real alpha (negative alpha gives J^-alpha).
 * 1/Gamma(beta-alpha) goes through rgamma, so the result is exactly zero when
 * beta - alpha is a nonpositive integer.
 *
 * rl_integral_numeric / rl_deriv_numeric evaluate the definition directly.
 * They are slow and only meant as an independent check of the closed forms.
 */

#include <functional>
#include <vector>

namespace fracorder::frac {

/// t -> (t - a)^(beta - 1), beta > 0.
struct ShiftedPower {
  double a = 0.0;
  double beta = 1.0;
};

/// coeff * (t - a)^(beta - 1)
struct ScaledPower {
  double coeff = 1.0;
  ShiftedPower power;

  double operator()(double t) const;
};

/// f(t) = sum_k coeffs[k] t^k, convergent for |t| < radius.
///
/// `remainder_bound`, when set, returns an upper bound on sum_{k>K} |c_k| t^k
/// for the coefficients that were dropped when the series was truncated to
/// coeffs.size() terms. Unset means the polynomial is the whole function.
struct PowerSeries {
  std::vector<double> coeffs;
  double radius = 0.0;
  std::function<double(double)> remainder_bound;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
  /// Horner evaluation of the stored coefficients.
  double evaluate(double t) const;
  /// Upper bound on the dropped tail at t, 0 when no bound is attached.
  double remainder(double t) const;
  /// Series of s -> f(scale * s), with radius / scale. scale > 0.
  PowerSeries rescaled(double scale) const;
};

/// Order alpha together with m = max(1, ceil(alpha)).
struct FracOrder {
  double alpha = 0.5;
  unsigned m = 1;

  static FracOrder of(double alpha);
};

/// Closed-form D^alpha of a shifted power at t > a.
double rl_deriv_power(const ShiftedPower& p, double alpha, double t);

/// D^alpha of a shifted power as another scaled shifted power (beta -> beta - alpha).
ScaledPower rl_deriv_power_term(const ShiftedPower& p, double alpha);

/// Term-wise D^alpha of a power series at 0 < t < radius.
double rl_deriv_series(const PowerSeries& f, double alpha, double t);

using RealFunction = std::function<double(double)>;

/// J^alpha f(t) (lower limit 0) by adaptive quadrature after the substitution
/// tau = t - u^(1/alpha), which turns the kernel (t-tau)^(alpha-1) dtau into du/alpha.
double rl_integral_numeric(const RealFunction& f, double alpha, double t, double tol);

/// D^alpha f(t) as the m-th central difference (step h) of s -> J^(m-alpha) f(s).
double rl_deriv_numeric(const RealFunction& f, const FracOrder& order, double t, double h = 1e-3,
                        double tol = 1e-8);

}  // namespace fracorder::frac
