#pragma once

// Quadrature building blocks shared by the fractional-operator oracle and the
// order-integral driver.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fracorder::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
/// Nodes are mirror-exact: node[n-1-i] == -node[i].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(unsigned order);
  unsigned order() const { return static_cast<unsigned>(nodes.size()); }
};

/// Gauss-Legendre rule mapped to the unit panel [0, 1], with sin(pi x) tabulated
/// at each node.
///
/// A panel is addressed by the integer `left` of [left, left+1]. Panels with
/// left < 0 are evaluated at the mirror images of the nonnegative panel's
/// nodes: for k = -left-1 the nodes are -(k + x_i). This makes the contribution
/// of an odd integrand cancel exactly between [k, k+1] and [-k-1, -k].
class PanelRule {
 public:
  explicit PanelRule(unsigned order);

  unsigned order() const { return static_cast<unsigned>(x_.size()); }
  std::span<const double> nodes() const { return x_; }
  std::span<const double> weights() const { return w_; }
  std::span<const double> sin_pi_nodes() const { return sin_x_; }

  /// i-th abscissa of panel `left`.
  double abscissa(std::int64_t left, unsigned i) const {
    if (left >= 0) return static_cast<double>(left) + x_[i];
    return -(static_cast<double>(-left - 1) + x_[i]);
  }

  /// Sign s with sin(pi * abscissa(left, i)) == s * sin_pi_nodes()[i].
  static double sin_sign(std::int64_t left) {
    if (left >= 0) return (left % 2 == 0) ? 1.0 : -1.0;
    return ((-left - 1) % 2 == 0) ? -1.0 : 1.0;
  }

  /// Integral of g over the panel.
  template <typename G>
  double integrate(const G& g, std::int64_t left) const {
    std::vector<double> values(x_.size());
    for (unsigned i = 0; i < values.size(); ++i) values[i] = g(abscissa(left, i));
    return weighted(values);
  }

 private:
  double weighted(std::span<const double> values) const;

  std::vector<double> x_;
  std::vector<double> w_;
  std::vector<double> sin_x_;
};

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  unsigned intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. Bisects the worst
/// interval until the summed error estimate is <= abs_tol. Throws
/// convergence_error once an interval would be split more than `max_depth`
/// times.
AdaptiveResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                                      double b, double abs_tol, unsigned max_depth = 40);

}  // namespace fracorder::quadrature
