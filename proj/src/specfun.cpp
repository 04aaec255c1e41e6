#include "fracorder/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracorder/errors.hpp"

namespace fracorder::specfun {
namespace {

constexpr Real kPi = std::numbers::pi;
constexpr Real kPoleGuard = 1e-12;
constexpr unsigned kMaxExactFactorialArg = 171;

// Lanczos approximation, g = 7, nine terms. Relative error ~1e-15 for x >= 0.5.
constexpr Real kLanczosG = 7.0;
constexpr std::array<Real, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_integer(Real x) { return std::nearbyint(x) == x; }

// Gamma for x >= 0.5. The power is split in two halves so that
// base^(x-0.5) e^-base does not overflow before the product settles for x ~ 170.
Real gamma_lanczos(Real x) {
  const Real z = x - 1.0;
  Real series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<Real>(i));
  }
  const Real base = z + kLanczosG + 0.5;
  const Real half_pow = std::pow(base, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half_pow * (half_pow * std::exp(-base)) * series;
}

}  // namespace

Real sin_pi(Real x) {
  if (!std::isfinite(x)) return std::numeric_limits<Real>::quiet_NaN();
  // remainder() is exact, r in [-1, 1]
  Real r = std::remainder(x, 2.0);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  if (r == 0.0) return 0.0;
  return std::sin(kPi * r);
}

Real factorial(unsigned n) {
  Real result = 1.0;
  for (unsigned k = 2; k <= n; ++k) result *= static_cast<Real>(k);
  return result;
}

Real gamma(Real x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && std::abs(x - std::nearbyint(x)) <= kPoleGuard) {
    throw pole_error("gamma: pole at nonpositive integer x = " + std::to_string(x));
  }
  if (is_integer(x) && x >= 1.0 && x <= kMaxExactFactorialArg) {
    return factorial(static_cast<unsigned>(x) - 1);
  }
  if (x >= 0.5) return gamma_lanczos(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kPi / (sin_pi(x) * gamma_lanczos(1.0 - x));
}

Real rgamma(Real x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && is_integer(x)) return 0.0;
  if (is_integer(x) && x >= 1.0 && x <= kMaxExactFactorialArg) {
    return 1.0 / factorial(static_cast<unsigned>(x) - 1);
  }
  if (x >= 0.5) return 1.0 / gamma_lanczos(x);
  return sin_pi(x) * gamma_lanczos(1.0 - x) / kPi;
}

Real sinc(Real x) {
  if (std::abs(x) < 1e-4) {
    const Real px2 = (kPi * x) * (kPi * x);
    return 1.0 - px2 / 6.0 * (1.0 - px2 / 20.0);
  }
  return sin_pi(x) / (kPi * x);
}

Real pochhammer(Real z, unsigned n) {
  Real result = 1.0;
  for (unsigned k = 0; k < n; ++k) result *= z + static_cast<Real>(k);
  return result;
}

Real gen_binom_gamma_form(unsigned n, Real alpha) {
  return factorial(n) * rgamma(static_cast<Real>(n) + 1.0 - alpha) * rgamma(1.0 + alpha);
}

Real gen_binom_trig_form(unsigned n, Real alpha) {
  return factorial(n) * sin_pi(alpha) / (kPi * alpha * pochhammer(1.0 - alpha, n));
}

Real gen_binom(unsigned n, Real alpha) {
  if (std::abs(alpha) > static_cast<Real>(n) + 1.0) return gen_binom_trig_form(n, alpha);
  return gen_binom_gamma_form(n, alpha);
}

}  // namespace fracorder::specfun
