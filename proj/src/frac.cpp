#include "fracorder/frac.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracorder/quadrature.hpp"
#include "fracorder/specfun.hpp"

namespace fracorder::frac {

using specfun::gamma;
using specfun::rgamma;

double ScaledPower::operator()(double t) const {
  return coeff * std::pow(t - power.a, power.beta - 1.0);
}

void PowerSeries::validate() const {
  if (coeffs.empty()) throw std::invalid_argument("PowerSeries: at least one coefficient required");
  if (!(radius > 0.0)) throw std::invalid_argument("PowerSeries: radius must be > 0");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("PowerSeries: non-finite coefficient");
  }
}

double PowerSeries::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double PowerSeries::remainder(double t) const {
  return remainder_bound ? remainder_bound(t) : 0.0;
}

PowerSeries PowerSeries::rescaled(double scale) const {
  if (!(scale > 0.0)) throw std::invalid_argument("PowerSeries::rescaled: scale must be > 0");
  PowerSeries out;
  out.coeffs.reserve(coeffs.size());
  double factor = 1.0;
  for (double c : coeffs) {
    out.coeffs.push_back(c * factor);
    factor *= scale;
  }
  out.radius = radius / scale;
  if (remainder_bound) {
    out.remainder_bound = [bound = remainder_bound, scale](double s) { return bound(scale * s); };
  }
  return out;
}

FracOrder FracOrder::of(double alpha) {
  const double m = std::ceil(alpha);
  return {alpha, static_cast<unsigned>(m < 1.0 ? 1.0 : m)};
}

ScaledPower rl_deriv_power_term(const ShiftedPower& p, double alpha) {
  if (!(p.beta > 0.0)) throw std::domain_error("rl_deriv_power: beta must be > 0");
  return {gamma(p.beta) * rgamma(p.beta - alpha), {p.a, p.beta - alpha}};
}

double rl_deriv_power(const ShiftedPower& p, double alpha, double t) {
  if (!(t > p.a)) {
    throw std::domain_error("rl_deriv_power: t must exceed the lower limit a");
  }
  const ScaledPower term = rl_deriv_power_term(p, alpha);
  if (term.coeff == 0.0) return 0.0;
  return term(t);
}

double rl_deriv_series(const PowerSeries& f, double alpha, double t) {
  f.validate();
  if (!(t > 0.0) || !(t < f.radius)) {
    throw std::domain_error("rl_deriv_series: t must lie in (0, radius)");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (f.coeffs[k] == 0.0) continue;
    const double kk = static_cast<double>(k);
    sum += f.coeffs[k] * gamma(kk + 1.0) * rgamma(kk + 1.0 - alpha) * std::pow(t, kk - alpha);
  }
  return sum;
}

double rl_integral_numeric(const RealFunction& f, double alpha, double t, double tol) {
  if (!(alpha > 0.0)) throw std::domain_error("rl_integral_numeric: alpha must be > 0");
  if (!(t > 0.0)) throw std::domain_error("rl_integral_numeric: t must be > 0");
  const double inv_alpha = 1.0 / alpha;
  // J^alpha f(t) = 1/Gamma(alpha+1) int_0^{t^alpha} f(t - u^(1/alpha)) du
  const double upper = std::pow(t, alpha);
  const double scale = rgamma(alpha + 1.0);
  auto integrand = [&](double u) { return f(t - std::pow(u, inv_alpha)); };
  const auto result = quadrature::adaptive_gauss_kronrod(integrand, 0.0, upper, tol / scale);
  return scale * result.value;
}

double rl_deriv_numeric(const RealFunction& f, const FracOrder& order, double t, double h,
                        double tol) {
  const double alpha = order.alpha;
  if (!(alpha > 0.0) || std::nearbyint(alpha) == alpha) {
    throw std::domain_error("rl_deriv_numeric: alpha must be positive and non-integer");
  }
  const unsigned m = order.m;
  if (static_cast<double>(m) != std::ceil(alpha)) {
    throw std::domain_error("rl_deriv_numeric: m must equal ceil(alpha)");
  }
  if (!(h > 0.0) || !(t - m * h > 0.0)) {
    throw std::domain_error("rl_deriv_numeric: need h > 0 and t - m*h > 0");
  }
  const double inner = static_cast<double>(m) - alpha;
  // sum_j (-1)^j C(m, j) u(t + (m/2 - j) h) / h^m
  double sum = 0.0;
  double binom = 1.0;
  for (unsigned j = 0; j <= m; ++j) {
    const double s = t + (0.5 * m - j) * h;
    const double u = rl_integral_numeric(f, inner, s, tol);
    sum += ((j % 2 == 0) ? binom : -binom) * u;
    binom = binom * (m - j) / (j + 1);
  }
  return sum / std::pow(h, static_cast<double>(m));
}

}  // namespace fracorder::frac
