#pragma once

/**
 * @file orderquad.hpp
 * @brief Integrals over the derivative order alpha on the whole real line.
 *
 * The integrands have the shape g(alpha) = sin(pi alpha) R(alpha) with
 * |R(alpha)| = O(|alpha|^-d). The line is cut into unit panels [k, k+1] at the
 * zeros of sin(pi alpha). A "period" k is the symmetric pair of panels
 * [k, k+1] and [-k-1, -k]. Summing period by period is a principal-value
 * realization: for d = 1 (sinc) the integral is only conditionally convergent
 * and the result depends on that ordering.
 *
 * Period sums alternate in sign once |alpha| is past the poles of R:
 *
 *  - d == 1: partial sums are accelerated with the Euler transformation of the
 *    alternating tail. Truncating at A periods leaves an O(1/A) error, which
 *    the transformation reduces to roundoff within a few dozen periods.
 *  - d >= 2: plain summation. The remainder is bounded by the last period sum
 *    (Leibniz bound) once the sums are seen to alternate and shrink, and by
 *    the power-law tail 2 C A^(1-d) / (d-1) otherwise.
 *
 * With t^alpha / Gamma(1+alpha) D^alpha t^(n-1) = t^(n-1) C(n-1, alpha) the
 * lemma integral is a binomial integral in disguise; both reduce to
 * n! sin(pi alpha)/(pi alpha (1-alpha)_n) outside |alpha| <= n+1, where the
 * SIMD panel kernel takes over from the pole-safe Gamma evaluation.
 */

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fracorder/frac.hpp"
#include "fracorder/quadrature.hpp"

namespace fracorder::orderquad {

struct QuadratureConfig {
  unsigned panel_order = 16;   ///< Gauss-Legendre nodes per unit panel
  unsigned max_periods = 10000;
  unsigned accel_terms = 24;   ///< terms fed to the Euler transformation
  double abs_tol = 1e-10;
  bool pv_symmetric = true;    ///< sum [k,k+1] and [-k-1,-k] together

  /// Throws std::invalid_argument on panel_order < 4, accel_terms < 4 or abs_tol <= 0.
  void validate() const;
};

struct OrderIntegralResult {
  double value = 0.0;
  double err_estimate = 0.0;
  unsigned periods_used = 0;
  bool converged = false;
  bool used_acceleration = false;
};

template <typename G>
concept OrderIntegrand = requires(const G& g, double alpha) {
  { g(alpha) } -> std::convertible_to<double>;
};

/// Integrands that know how to integrate a whole unit panel themselves.
template <typename G>
concept PanelIntegrand = OrderIntegrand<G> && requires(const G& g, const quadrature::PanelRule& r,
                                                       std::int64_t left) {
  { g.panel_sum(r, left) } -> std::convertible_to<double>;
};

/// t^alpha / Gamma(1+alpha) * D^alpha t^(n-1), evaluated at t > 0.
double lemma_integrand(unsigned n, double t, double alpha);

/// scale * sin(pi alpha) / (alpha (1-alpha)_degree). Evaluated straight from the
/// rational form, so it must not be sampled at alpha in {0..degree}; panel nodes never are.
struct SineRational {
  unsigned degree = 0;
  double scale = 1.0;

  double operator()(double alpha) const;
  double panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const;
};

/// alpha -> C(n, alpha)
struct BinomIntegrand {
  unsigned n = 0;

  double operator()(double alpha) const;
  double panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const;
};

/// alpha -> lemma_integrand(n, t, alpha)
struct LemmaIntegrand {
  unsigned n = 1;
  double t = 1.0;

  double operator()(double alpha) const { return lemma_integrand(n, t, alpha); }
  double panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const;
};

/// Euler transformation of the alternating series sum_m terms[m].
struct EulerSum {
  double value = 0.0;
  double last_term = 0.0;
};
EulerSum euler_transform(std::span<const double> terms);

/// Bound on int_{|alpha| > A} C |alpha|^-d dalpha over `sides` half-lines (d >= 2).
double power_tail_bound(double envelope, double cutoff, unsigned decay, unsigned sides = 2);

namespace detail {

using PanelFn = std::function<double(std::int64_t left)>;
using SampleFn = std::function<double(double alpha)>;

OrderIntegralResult integrate_panels(const PanelFn& panel, const SampleFn& sample, unsigned decay,
                                     const QuadratureConfig& cfg);

template <OrderIntegrand G>
PanelFn panel_fn(const G& g, const quadrature::PanelRule& rule) {
  return [&g, &rule](std::int64_t left) -> double {
    if constexpr (PanelIntegrand<G>) {
      return g.panel_sum(rule, left);
    } else {
      return rule.integrate(g, left);
    }
  };
}

}  // namespace detail

/// Principal-value integral of g over the real line; `decay` is d in
/// |g| = O(|alpha|^-d). Returns converged = false when max_periods runs out.
template <OrderIntegrand G>
OrderIntegralResult integrate_order(const G& g, unsigned decay, const QuadratureConfig& cfg) {
  cfg.validate();
  const quadrature::PanelRule rule(cfg.panel_order);
  return detail::integrate_panels(detail::panel_fn(g, rule),
                                  [&g](double alpha) { return static_cast<double>(g(alpha)); },
                                  decay, cfg);
}

/// The symmetric period sums P_0 .. P_{count-1}, unaccelerated.
template <OrderIntegrand G>
std::vector<double> period_sums(const G& g, std::size_t count, const QuadratureConfig& cfg) {
  cfg.validate();
  const quadrature::PanelRule rule(cfg.panel_order);
  const auto panel = detail::panel_fn(g, rule);
  std::vector<double> sums(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    sums[k] = panel(kk) + panel(-kk - 1);
  }
  return sums;
}

/// int C(n-1 choose alpha) t^(n-1) dalpha; exact value (2t)^(n-1).
OrderIntegralResult lemma_integral(unsigned n, double t, const QuadratureConfig& cfg = {});

/// int C(n, alpha) dalpha for n >= 1; exact value 2^n.
OrderIntegralResult binom_integral(unsigned n, const QuadratureConfig& cfg = {});

/// int t^alpha/Gamma(1+alpha) [D^alpha g](t) dalpha with g(s) = f(s/2), summed
/// term by term over the series; reproduces f(t) for 0 <= t < radius.
/// err_estimate includes f's remainder bound at t.
OrderIntegralResult main_identity_eval(const frac::PowerSeries& f, double t,
                                       const QuadratureConfig& cfg = {});

/// Integrand of main_identity_eval at one order alpha (t > 0).
double main_identity_integrand(const frac::PowerSeries& f, double t, double alpha);

}  // namespace fracorder::orderquad
