#include <cstddef>

#include "fracorder/kernels.hpp"

namespace fracorder::kernels::scalar {

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * v[i];
  return sum;
}

double sine_rational_panel(const SineRationalPanel& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const double a = p.mirror * (p.base + p.nodes[i]);
    double den = a;
    for (unsigned j = 1; j <= p.degree; ++j) den *= static_cast<double>(j) - a;
    sum += p.weights[i] * p.sin_nodes[i] / den;
  }
  return sum;
}

}  // namespace fracorder::kernels::scalar
