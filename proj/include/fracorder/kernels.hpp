#pragma once

/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops of the panel quadrature.
 *
 * Each kernel has a scalar reference implementation and, on x86-64, an AVX2
 * variant. The variant is chosen once at first use from CPUID; setting the
 * environment variable FRACORDER_ISA=scalar forces the reference path.
 *
 * The AVX2 variants reassociate the sums (four lanes, FMA), so results agree
 * with the scalar path to a few ulps rather than bitwise.
 */

#include <cstdint>
#include <span>
#include <string_view>

namespace fracorder::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when this build carries the AVX2 variants and the CPU runs them.
bool avx2_available();

/// ISA used by the dispatching entry points below.
Isa active_isa();

/// Arguments of the sine-rational panel kernel.
///
/// Abscissae are a_i = mirror * (base + x_i). The kernel returns
///
///     sum_i w_i s_i / (a_i (1 - a_i)(2 - a_i) ... (degree - a_i))
///
/// where s_i = sin(pi x_i). The caller applies the panel's sine sign and any
/// constant factor.
struct SineRationalPanel {
  std::span<const double> nodes;
  std::span<const double> weights;
  std::span<const double> sin_nodes;
  double base = 0.0;
  double mirror = 1.0;
  unsigned degree = 0;
};

/// sum_i w_i v_i
double weighted_sum(std::span<const double> w, std::span<const double> v);

double sine_rational_panel(const SineRationalPanel& p);

namespace scalar {
double weighted_sum(std::span<const double> w, std::span<const double> v);
double sine_rational_panel(const SineRationalPanel& p);
}  // namespace scalar

#if defined(FRACORDER_HAVE_AVX2)
namespace avx2 {
double weighted_sum(std::span<const double> w, std::span<const double> v);
double sine_rational_panel(const SineRationalPanel& p);
}  // namespace avx2
#endif

}  // namespace fracorder::kernels
