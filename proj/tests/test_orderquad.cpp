#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fracorder/orderquad.hpp"
#include "fracorder/residue.hpp"
#include "fracorder/specfun.hpp"

using namespace fracorder;
using namespace fracorder::orderquad;

namespace {

constexpr double kPi = std::numbers::pi;

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

frac::PowerSeries truncated_exp(unsigned k_max) {
  frac::PowerSeries f{{}, std::numeric_limits<double>::infinity(), {}};
  double c = 1.0;
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > 0) c /= k;
    f.coeffs.push_back(c);
  }
  return f;
}

}  // namespace

TEST_CASE("lemma_integrand reference values") {
  CHECK(close_rel(lemma_integrand(1, 7.0, 0.5), 2.0 / kPi, 1e-14));
  CHECK(close_rel(lemma_integrand(2, 1.0, 0.0), 1.0, 1e-14));
  CHECK(close_rel(lemma_integrand(3, 2.0, 1.0), 8.0, 1e-14));
  CHECK(lemma_integrand(3, 2.0, 3.0) == 0.0);
  CHECK(lemma_integrand(3, 2.0, -1.0) == 0.0);
  CHECK_THROWS_AS(lemma_integrand(0, 1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(lemma_integrand(2, 0.0, 0.5), std::domain_error);
}

TEST_CASE("lemma_integrand equals t^(n-1) C(n-1, alpha)") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (double a = -12.3; a < 12.5; a += 0.27) {
      for (double t : {0.5, 1.0, 3.0}) {
        const double binom = std::pow(t, n - 1.0) * specfun::gen_binom(n - 1, a);
        CHECK(std::abs(lemma_integrand(n, t, a) - binom) <= 1e-12 * std::max(1.0, std::abs(binom)));
      }
    }
  }
}

TEST_CASE("t-independence of the lemma integrand") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alpha_dist(-9.0, 9.0);
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned n = 1 + trial % 6;
    const double a = alpha_dist(rng);
    const double base = lemma_integrand(n, 1.0, a);
    for (double t : {0.5, 2.0}) {
      const double scaled = lemma_integrand(n, t, a) / std::pow(t, n - 1.0);
      INFO("n = " << n << ", alpha = " << a << ", t = " << t);
      CHECK(std::abs(scaled - base) <= 1e-12 * std::abs(base));
    }
  }
}

TEST_CASE("main identity integrand is the series of binomial integrands") {
  const frac::PowerSeries f{{0.3, -1.0, 2.0, 0.25}, 5.0, {}};
  for (double t : {0.4, 1.7}) {
    for (double a : {-2.25, -0.5, 0.3, 1.0, 2.75}) {
      double expected = 0.0;
      for (unsigned k = 0; k < f.coeffs.size(); ++k) {
        expected += f.coeffs[k] * std::pow(t / 2.0, k) * specfun::gen_binom(k, a);
      }
      CHECK(std::abs(main_identity_integrand(f, t, a) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("QuadratureConfig validation") {
  CHECK_NOTHROW(QuadratureConfig{}.validate());
  CHECK_THROWS_AS((QuadratureConfig{3}.validate()), std::invalid_argument);
  QuadratureConfig cfg;
  cfg.accel_terms = 2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(integrate_order([](double) { return 0.0; }, 1, cfg), std::invalid_argument);
}

TEST_CASE("Euler transformation") {
  // sum (-1)^m / (m+1) = ln 2
  std::vector<double> terms;
  for (int m = 0; m < 40; ++m) terms.push_back(((m % 2) ? -1.0 : 1.0) / (m + 1.0));
  const EulerSum s = euler_transform(terms);
  CHECK(std::abs(s.value - std::log(2.0)) < 1e-11);
  CHECK(std::abs(s.last_term) < 1e-11);
  CHECK(euler_transform(std::vector<double>(10, 0.0)).value == 0.0);
}

TEST_CASE("power tail bound") {
  CHECK(power_tail_bound(3.0, 10.0, 2) == doctest::Approx(0.6));
  CHECK(power_tail_bound(3.0, 10.0, 4, 1) == doctest::Approx(1e-3));
  CHECK_THROWS_AS(power_tail_bound(1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("sinc integrates to one with acceleration") {
  const auto r = integrate_order([](double a) { return specfun::sinc(a); }, 1, {});
  CHECK(r.converged);
  CHECK(r.used_acceleration);
  CHECK(std::abs(r.value - 1.0) <= 1e-8);
  CHECK(r.err_estimate <= 1e-10);
  CHECK(r.periods_used <= 200);

  // raw truncation at A = 50 periods is far worse
  const auto sums = period_sums([](double a) { return specfun::sinc(a); }, 50, {});
  double raw = 0.0;
  for (double p : sums) raw += p;
  CHECK(std::abs(raw - 1.0) >= 100.0 * std::abs(r.value - 1.0));
  CHECK(std::abs(raw - 1.0) > 1e-3);
  CHECK(std::abs(raw - 1.0) < 1e-2);
}

TEST_CASE("half-line summation agrees for absolutely summable halves") {
  QuadratureConfig cfg;
  cfg.pv_symmetric = false;
  const auto sinc_r = integrate_order([](double a) { return specfun::sinc(a); }, 1, cfg);
  CHECK(sinc_r.converged);
  CHECK(std::abs(sinc_r.value - 1.0) <= 1e-9);
  const auto binom_r = integrate_order(BinomIntegrand{3}, 4, cfg);
  CHECK(binom_r.converged);
  CHECK(std::abs(binom_r.value - 8.0) <= 1e-8);
}

TEST_CASE("odd integrands vanish under principal-value pairing") {
  const auto r = integrate_order([](double a) { return a * specfun::sinc(a) * specfun::sinc(a); }, 1, {});
  CHECK(r.converged);
  CHECK(std::abs(r.value) <= 1e-10);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c0 = coef(rng);
    const double c2 = coef(rng);
    auto odd = [c0, c2](double a) { return specfun::sin_pi(a) * (c0 + c2 * a * a) / (1.0 + a * a * a * a); };
    const auto s = integrate_order(odd, 2, {});
    CHECK(std::abs(s.value) <= 1e-10);
  }
}

TEST_CASE("sine-rational integral matches the residue value") {
  const auto r = integrate_order(SineRational{1, 1.0}, 2, {});
  CHECK(r.converged);
  CHECK(close_rel(r.value, 2.0 * kPi, 1e-8));
  for (unsigned n = 1; n <= 8; ++n) {
    const double exact = residue::indented_integral_value(n);
    const auto kernel_path = integrate_order(SineRational{n, 1.0}, n + 1, {});
    const auto plain_path = integrate_order(
        [n](double a) { return specfun::sin_pi(a) / (a * specfun::pochhammer(1.0 - a, n)); }, n + 1, {});
    INFO("n = " << n);
    CHECK(close_rel(kernel_path.value, exact, 1e-8));
    CHECK(close_rel(plain_path.value, exact, 1e-8));
    CHECK(std::abs(kernel_path.value - plain_path.value) <= 1e-12 * exact);
  }
}

TEST_CASE("lemma_integral") {
  CHECK(std::abs(lemma_integral(1, 3.0).value - 1.0) <= 1e-10);
  CHECK(std::abs(lemma_integral(2, 1.0).value - 2.0) <= 1e-9);
  CHECK(std::abs(lemma_integral(4, 0.5).value - 1.0) <= 1e-9);
  CHECK_THROWS_AS(lemma_integral(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lemma_integral(2, -1.0), std::domain_error);
}

TEST_CASE("lemma reproduction over the grid") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
      const double exact = std::pow(2.0 * t, n - 1.0);
      const auto r = lemma_integral(n, t);
      INFO("n = " << n << ", t = " << t);
      CHECK(r.converged);
      CHECK(r.err_estimate <= QuadratureConfig{}.abs_tol);
      CHECK(std::abs(r.value - exact) <= std::max(1e-8, 1e-8 * exact));
      CHECK(r.used_acceleration == (n == 1));
    }
  }
}

TEST_CASE("binom_integral") {
  CHECK(close_rel(binom_integral(1).value, 2.0, 1e-9));
  CHECK(close_rel(binom_integral(5).value, 32.0, 1e-9));
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(close_rel(binom_integral(n).value, std::ldexp(1.0, n), 1e-6));
  }
  CHECK_THROWS_AS(binom_integral(0), std::domain_error);
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureConfig cfg;
  cfg.max_periods = 30;
  const auto r = lemma_integral(2, 1.0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.periods_used == 30);
  CHECK(r.err_estimate > cfg.abs_tol);
  const auto s = integrate_order([](double a) { return specfun::sinc(a); }, 1, cfg);
  CHECK(s.periods_used <= 30);
}

TEST_CASE("converged results honour the requested tolerance") {
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    QuadratureConfig cfg;
    cfg.abs_tol = tol;
    for (unsigned n = 1; n <= 5; ++n) {
      const auto r = lemma_integral(n, 1.0, cfg);
      if (r.converged) CHECK(r.err_estimate <= tol);
      CHECK(std::abs(r.value - std::pow(2.0, n - 1.0)) <= std::max(2.0 * tol, 1e-13 * std::pow(2.0, n)));
    }
  }
}

TEST_CASE("main identity") {
  const frac::PowerSeries constant{{2.5}, 1.0, {}};
  for (double t : {0.0, 0.3, 0.9}) CHECK(std::abs(main_identity_eval(constant, t).value - 2.5) <= 1e-9);

  const auto e = main_identity_eval(truncated_exp(20), 0.5);
  CHECK(std::abs(e.value - std::exp(0.5)) <= 1e-6);
  CHECK(e.converged);

  const frac::PowerSeries square{{0.0, 0.0, 1.0}, std::numeric_limits<double>::infinity(), {}};
  CHECK(std::abs(main_identity_eval(square, 1.0).value - 1.0) <= 1e-9);

  CHECK_THROWS_AS(main_identity_eval({{1.0, 1.0}, 1.0, {}}, 1.0), std::domain_error);
  CHECK_THROWS_AS(main_identity_eval({{1.0, 1.0}, 1.0, {}}, -0.1), std::domain_error);
}

TEST_CASE("main identity carries the series remainder") {
  frac::PowerSeries geom{std::vector<double>(11, 1.0), 1.0, [](double t) { return std::pow(t, 11.0) / (1.0 - t); }};
  const auto r = main_identity_eval(geom, 0.8);
  const double truncated = geom.evaluate(0.8);
  CHECK(std::abs(r.value - truncated) <= 1e-8);
  CHECK(r.err_estimate >= geom.remainder(0.8));
  CHECK(std::abs(r.value - 1.0 / (1.0 - 0.8)) <= r.err_estimate + 1e-8);
  CHECK_FALSE(r.converged);
}

TEST_CASE("main identity is linear") {
  const frac::PowerSeries f{{1.0, -0.5, 0.25, 2.0}, 3.0, {}};
  const frac::PowerSeries g{{0.0, 1.5, -1.0, 0.0, 0.75}, 3.0, {}};
  const double c = -1.75;
  frac::PowerSeries h{{}, 3.0, {}};
  for (std::size_t k = 0; k < 5; ++k) {
    const double fk = k < f.coeffs.size() ? f.coeffs[k] : 0.0;
    h.coeffs.push_back(c * fk + g.coeffs[k]);
  }
  for (double t : {0.2, 1.1, 2.5}) {
    const auto rf = main_identity_eval(f, t);
    const auto rg = main_identity_eval(g, t);
    const auto rh = main_identity_eval(h, t);
    const double bound = std::abs(c) * rf.err_estimate + rg.err_estimate + rh.err_estimate + 1e-12 * std::abs(rh.value);
    CHECK(std::abs(rh.value - (c * rf.value + rg.value)) <= bound);
  }
}
