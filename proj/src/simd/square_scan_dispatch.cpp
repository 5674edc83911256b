#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "heron/simd/square_scan.hpp"

namespace heron::simd {
namespace {

Isa detect() {
#if defined(HERON_HAVE_AVX2_TU)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if defined(HERON_HAVE_NEON_TU)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

Isa initial_isa() {
  if (const char* env = std::getenv("HERON_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  return detect();
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(HERON_HAVE_AVX2_TU)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::Neon:
#if defined(HERON_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa))
    throw std::invalid_argument("force_isa: " + std::string(isa_name(*isa)) + " not available");
  selected().store(isa ? *isa : detect(), std::memory_order_relaxed);
}

void square_scan(const SquareScanForm& form, std::int64_t first, std::span<std::int64_t> roots) {
  switch (active_isa()) {
#if defined(HERON_HAVE_AVX2_TU)
    case Isa::Avx2: return square_scan_avx2(form, first, roots);
#endif
#if defined(HERON_HAVE_NEON_TU)
    case Isa::Neon: return square_scan_neon(form, first, roots);
#endif
    default: return square_scan_scalar(form, first, roots);
  }
}

}  // namespace heron::simd
