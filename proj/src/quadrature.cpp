#include "fracorder/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

#include "fracorder/errors.hpp"
#include "fracorder/kernels.hpp"
#include "fracorder/specfun.hpp"

namespace fracorder::quadrature {

GaussLegendre::GaussLegendre(unsigned order) : nodes(order), weights(order) {
  if (order == 0) throw std::invalid_argument("GaussLegendre: order must be positive");
  const unsigned half = (order + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess; converges to the
    // i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (unsigned k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[order - 1 - i] = x;
    nodes[i] = -x;
    weights[order - 1 - i] = w;
    weights[i] = w;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
}

PanelRule::PanelRule(unsigned order) {
  const GaussLegendre gl(order);
  x_.resize(order);
  w_.resize(order);
  sin_x_.resize(order);
  for (unsigned i = 0; i < order; ++i) {
    x_[i] = 0.5 * (gl.nodes[i] + 1.0);
    w_[i] = 0.5 * gl.weights[i];
    sin_x_[i] = specfun::sin_pi(x_[i]);
  }
}

double PanelRule::weighted(std::span<const double> values) const {
  return kernels::weighted_sum(w_, values);
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a;
  double b;
  double value;
  double error;
  unsigned depth;
  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval kronrod15(const std::function<double(double)>& f, double a, double b,
                   unsigned depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), depth};
}

}  // namespace

AdaptiveResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                                      double b, double abs_tol, unsigned max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("adaptive_gauss_kronrod: abs_tol must be > 0");
  if (a == b) return {};
  std::priority_queue<Interval> queue;
  queue.push(kronrod15(f, a, b, 0));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  // floating-point floor: stop refining once the estimate is at roundoff level
  auto roundoff = [&] { return 50.0 * std::numeric_limits<double>::epsilon() * std::abs(total_value); };
  while (total_error > std::max(abs_tol, roundoff())) {
    const Interval worst = queue.top();
    if (worst.depth >= max_depth) {
      throw convergence_error("adaptive_gauss_kronrod: depth limit " +
                              std::to_string(max_depth) + " reached, error estimate " +
                              std::to_string(total_error));
    }
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Interval left = kronrod15(f, worst.a, mid, worst.depth + 1);
    const Interval right = kronrod15(f, mid, worst.b, worst.depth + 1);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // resum to shed the drift from incremental updates
  AdaptiveResult result;
  result.intervals = static_cast<unsigned>(queue.size());
  while (!queue.empty()) {
    result.value += queue.top().value;
    result.error += queue.top().error;
    queue.pop();
  }
  return result;
}

}  // namespace fracorder::quadrature
