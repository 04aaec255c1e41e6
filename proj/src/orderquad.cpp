#include "fracorder/orderquad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracorder/kernels.hpp"
#include "fracorder/specfun.hpp"

namespace fracorder::orderquad {

using specfun::factorial;
using specfun::gen_binom;
using specfun::rgamma;

void QuadratureConfig::validate() const {
  if (panel_order < 4) throw std::invalid_argument("QuadratureConfig: panel_order must be >= 4");
  if (accel_terms < 4) throw std::invalid_argument("QuadratureConfig: accel_terms must be >= 4");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be > 0");
  if (max_periods == 0) throw std::invalid_argument("QuadratureConfig: max_periods must be > 0");
}

double lemma_integrand(unsigned n, double t, double alpha) {
  if (n == 0) throw std::domain_error("lemma_integrand: n must be >= 1");
  if (!(t > 0.0)) throw std::domain_error("lemma_integrand: t must be > 0");
  const unsigned upper = n - 1;
  if (std::abs(alpha) > upper + 1.0) {
    // t^alpha t^(n-1-alpha) collapses to t^(n-1); the Gamma route would overflow here
    return std::pow(t, static_cast<double>(upper)) * gen_binom(upper, alpha);
  }
  return std::pow(t, alpha) * rgamma(1.0 + alpha) *
         frac::rl_deriv_power({0.0, static_cast<double>(n)}, alpha, t);
}

namespace {

// Panel [left, left+1] (or its mirror image) lies entirely in |alpha| > bound.
bool outside(std::int64_t left, unsigned bound) {
  const std::int64_t k = left >= 0 ? left : -left - 1;
  return k >= static_cast<std::int64_t>(bound);
}

double sine_rational_panel(const quadrature::PanelRule& rule, std::int64_t left, unsigned degree,
                           double scale) {
  kernels::SineRationalPanel p;
  p.nodes = rule.nodes();
  p.weights = rule.weights();
  p.sin_nodes = rule.sin_pi_nodes();
  p.base = static_cast<double>(left >= 0 ? left : -left - 1);
  p.mirror = left >= 0 ? 1.0 : -1.0;
  p.degree = degree;
  return scale * quadrature::PanelRule::sin_sign(left) * kernels::sine_rational_panel(p);
}

}  // namespace

double SineRational::operator()(double alpha) const {
  return scale * specfun::sin_pi(alpha) / (alpha * specfun::pochhammer(1.0 - alpha, degree));
}

double SineRational::panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const {
  return sine_rational_panel(rule, left, degree, scale);
}

double BinomIntegrand::operator()(double alpha) const { return gen_binom(n, alpha); }

double BinomIntegrand::panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const {
  if (outside(left, n + 1)) {
    return sine_rational_panel(rule, left, n, factorial(n) / std::numbers::pi);
  }
  return rule.integrate(*this, left);
}

double LemmaIntegrand::panel_sum(const quadrature::PanelRule& rule, std::int64_t left) const {
  const unsigned upper = n - 1;
  if (outside(left, upper + 1)) {
    const double scale = std::pow(t, static_cast<double>(upper)) * factorial(upper) / std::numbers::pi;
    return sine_rational_panel(rule, left, upper, scale);
  }
  return rule.integrate(*this, left);
}

EulerSum euler_transform(std::span<const double> terms) {
  // sum_m (-1)^m b_m = sum_j (-1)^j (Delta^j b)_0 / 2^(j+1), with b_m = (-1)^m terms[m]
  std::vector<double> diff(terms.size());
  for (std::size_t m = 0; m < terms.size(); ++m) diff[m] = (m % 2 == 0) ? terms[m] : -terms[m];
  EulerSum out;
  double scale = 0.5;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const double term = ((j % 2 == 0) ? diff[0] : -diff[0]) * scale;
    out.value += term;
    out.last_term = term;
    for (std::size_t m = 0; m + 1 < terms.size() - j; ++m) diff[m] = diff[m + 1] - diff[m];
    scale *= 0.5;
  }
  return out;
}

double power_tail_bound(double envelope, double cutoff, unsigned decay, unsigned sides) {
  if (decay < 2) throw std::invalid_argument("power_tail_bound: decay must be >= 2");
  const double d = static_cast<double>(decay);
  return sides * envelope * std::pow(cutoff, 1.0 - d) / (d - 1.0);
}

namespace detail {
namespace {

using TermFn = std::function<double(std::int64_t k)>;
using EnvelopeFn = std::function<double(std::int64_t k)>;

OrderIntegralResult sum_accelerated(const TermFn& term, const QuadratureConfig& cfg) {
  const std::size_t accel = cfg.accel_terms;
  std::vector<double> sums;
  auto ensure = [&](std::size_t count) {
    while (sums.size() < count) sums.push_back(term(static_cast<std::int64_t>(sums.size())));
  };

  OrderIntegralResult result;
  result.used_acceleration = true;
  std::size_t head = 16;
  while (true) {
    const bool last_try = head + accel + 1 >= cfg.max_periods;
    if (last_try) head = cfg.max_periods > accel + 1 ? cfg.max_periods - accel - 1 : 0;
    ensure(head + accel + 1);
    double partial = 0.0;
    for (std::size_t k = 0; k < head; ++k) partial += sums[k];
    const std::span<const double> all(sums);
    const EulerSum tail0 = euler_transform(all.subspan(head, accel));
    const EulerSum tail1 = euler_transform(all.subspan(head + 1, accel));
    const double estimate0 = partial + tail0.value;
    const double estimate1 = partial + sums[head] + tail1.value;
    result.value = estimate1;
    result.err_estimate = std::abs(tail0.last_term) + std::abs(estimate1 - estimate0);
    result.periods_used = static_cast<unsigned>(head + accel + 1);
    result.converged = result.err_estimate <= cfg.abs_tol;
    if (result.converged || last_try) return result;
    head *= 2;
  }
}

OrderIntegralResult sum_plain(const TermFn& term, const EnvelopeFn& envelope, unsigned decay,
                              unsigned sides, const QuadratureConfig& cfg) {
  OrderIntegralResult result;
  std::vector<double> sums;
  sums.reserve(256);
  double partial = 0.0;
  for (std::size_t k = 0; k < cfg.max_periods; ++k) {
    const double p = term(static_cast<std::int64_t>(k));
    sums.push_back(p);
    partial += p;

    // Leibniz bound once the sums alternate with shrinking magnitude past the poles
    bool alternating = k >= decay && k >= 3;
    for (std::size_t i = k - 3; alternating && i < k; ++i) {
      alternating = sums[i] * sums[i + 1] < 0.0 && std::abs(sums[i + 1]) < std::abs(sums[i]);
    }
    double err = 0.0;
    if (alternating) {
      err = std::abs(p);
    } else if (k >= 1) {
      const auto kk = static_cast<std::int64_t>(k);
      err = power_tail_bound(envelope(kk), static_cast<double>(k + 1), decay, sides);
    } else {
      continue;
    }
    result.value = partial;
    result.err_estimate = err;
    result.periods_used = static_cast<unsigned>(k + 1);
    if (err <= cfg.abs_tol) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

OrderIntegralResult sum_series(const TermFn& term, const EnvelopeFn& envelope, unsigned decay,
                               unsigned sides, const QuadratureConfig& cfg) {
  if (decay <= 1) return sum_accelerated(term, cfg);
  return sum_plain(term, envelope, decay, sides, cfg);
}

}  // namespace

OrderIntegralResult integrate_panels(const PanelFn& panel, const SampleFn& sample, unsigned decay,
                                     const QuadratureConfig& cfg) {
  if (decay == 0) throw std::invalid_argument("integrate_order: decay exponent must be >= 1");
  const double d = static_cast<double>(decay);
  // C in |g(alpha)| <= C |alpha|^-d, sampled at the panel midpoints where |sin(pi alpha)| = 1
  auto envelope_at = [&](double alpha) { return std::abs(sample(alpha)) * std::pow(std::abs(alpha), d); };

  if (cfg.pv_symmetric) {
    const TermFn term = [&](std::int64_t k) { return panel(k) + panel(-k - 1); };
    const EnvelopeFn envelope = [&](std::int64_t k) {
      const double mid = static_cast<double>(k) + 0.5;
      return std::max(envelope_at(mid), envelope_at(-mid));
    };
    return sum_series(term, envelope, decay, 2, cfg);
  }

  const TermFn right = [&](std::int64_t k) { return panel(k); };
  const TermFn left = [&](std::int64_t k) { return panel(-k - 1); };
  const EnvelopeFn right_env = [&](std::int64_t k) { return envelope_at(static_cast<double>(k) + 0.5); };
  const EnvelopeFn left_env = [&](std::int64_t k) { return envelope_at(-static_cast<double>(k) - 0.5); };
  QuadratureConfig half_cfg = cfg;
  half_cfg.abs_tol = 0.5 * cfg.abs_tol;
  const OrderIntegralResult r = sum_series(right, right_env, decay, 1, half_cfg);
  const OrderIntegralResult l = sum_series(left, left_env, decay, 1, half_cfg);
  OrderIntegralResult out;
  out.value = r.value + l.value;
  out.err_estimate = r.err_estimate + l.err_estimate;
  out.periods_used = std::max(r.periods_used, l.periods_used);
  out.converged = r.converged && l.converged && out.err_estimate <= cfg.abs_tol;
  out.used_acceleration = r.used_acceleration || l.used_acceleration;
  return out;
}

}  // namespace detail

OrderIntegralResult lemma_integral(unsigned n, double t, const QuadratureConfig& cfg) {
  if (n == 0) throw std::domain_error("lemma_integral: n must be >= 1");
  if (!(t > 0.0)) throw std::domain_error("lemma_integral: t must be > 0");
  return integrate_order(LemmaIntegrand{n, t}, n, cfg);
}

OrderIntegralResult binom_integral(unsigned n, const QuadratureConfig& cfg) {
  if (n == 0) throw std::domain_error("binom_integral: n must be >= 1");
  return integrate_order(BinomIntegrand{n}, n + 1, cfg);
}

OrderIntegralResult main_identity_eval(const frac::PowerSeries& f, double t,
                                       const QuadratureConfig& cfg) {
  f.validate();
  cfg.validate();
  if (!(t >= 0.0) || !(t < f.radius)) {
    throw std::domain_error("main_identity_eval: t must lie in [0, radius)");
  }
  OrderIntegralResult out;
  out.converged = true;
  const double half_t = 0.5 * t;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const double c = f.coeffs[k];
    if (c == 0.0) continue;
    const double weight = c * std::pow(half_t, static_cast<double>(k));
    if (weight == 0.0) continue;
    // int C(k, alpha) dalpha; k = 0 is the sinc integral and takes the accelerated path
    const auto kk = static_cast<unsigned>(k);
    const OrderIntegralResult term = integrate_order(BinomIntegrand{kk}, kk + 1, cfg);
    out.value += weight * term.value;
    out.err_estimate += std::abs(weight) * term.err_estimate;
    out.periods_used += term.periods_used;
    out.converged = out.converged && term.converged;
    out.used_acceleration = out.used_acceleration || term.used_acceleration;
  }
  out.err_estimate += f.remainder(t);
  out.converged = out.converged && out.err_estimate <= cfg.abs_tol;
  return out;
}

double main_identity_integrand(const frac::PowerSeries& f, double t, double alpha) {
  const frac::PowerSeries halved = f.rescaled(0.5);
  return std::pow(t, alpha) * rgamma(1.0 + alpha) * frac::rl_deriv_series(halved, alpha, t);
}

}  // namespace fracorder::orderquad
