#include <cstdlib>
#include <string_view>

#include "fracorder/kernels.hpp"

namespace fracorder::kernels {
namespace {

struct Table {
  Isa isa;
  double (*weighted_sum)(std::span<const double>, std::span<const double>);
  double (*sine_rational_panel)(const SineRationalPanel&);
};

Table select() {
  const char* forced = std::getenv("FRACORDER_ISA");
  const bool force_scalar = forced != nullptr && std::string_view(forced) == "scalar";
#if defined(FRACORDER_HAVE_AVX2)
  if (!force_scalar && avx2_available()) {
    return {Isa::avx2, &avx2::weighted_sum, &avx2::sine_rational_panel};
  }
#else
  (void)force_scalar;
#endif
  return {Isa::scalar, &scalar::weighted_sum, &scalar::sine_rational_panel};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(FRACORDER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return table().isa; }

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  return table().weighted_sum(w, v);
}

double sine_rational_panel(const SineRationalPanel& p) { return table().sine_rational_panel(p); }

}  // namespace fracorder::kernels
