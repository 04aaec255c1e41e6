#include <immintrin.h>

#include <cstddef>

#include "fracorder/kernels.hpp"

namespace fracorder::kernels::avx2 {
namespace {

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(v.data() + i), acc);
  }
  double sum = horizontal_sum(acc);
  for (; i < n; ++i) sum += w[i] * v[i];
  return sum;
}

double sine_rational_panel(const SineRationalPanel& p) {
  const std::size_t n = p.nodes.size();
  const __m256d base = _mm256_set1_pd(p.base);
  const __m256d mirror = _mm256_set1_pd(p.mirror);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(mirror, _mm256_add_pd(base, _mm256_loadu_pd(p.nodes.data() + i)));
    __m256d den = a;
    for (unsigned j = 1; j <= p.degree; ++j) {
      den = _mm256_mul_pd(den, _mm256_sub_pd(_mm256_set1_pd(static_cast<double>(j)), a));
    }
    const __m256d num = _mm256_mul_pd(_mm256_loadu_pd(p.weights.data() + i),
                                      _mm256_loadu_pd(p.sin_nodes.data() + i));
    acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
  }
  double sum = horizontal_sum(acc);
  for (; i < n; ++i) {
    const double a = p.mirror * (p.base + p.nodes[i]);
    double den = a;
    for (unsigned j = 1; j <= p.degree; ++j) den *= static_cast<double>(j) - a;
    sum += p.weights[i] * p.sin_nodes[i] / den;
  }
  return sum;
}

}  // namespace fracorder::kernels::avx2
