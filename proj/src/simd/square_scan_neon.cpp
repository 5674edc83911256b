// AArch64 variant. Advanced SIMD is mandatory on AArch64, so no runtime
// feature check is needed beyond building this translation unit.

#include <arm_neon.h>

#include "heron/simd/square_scan.hpp"

namespace heron::simd {

void square_scan_neon(const SquareScanForm& form, std::int64_t first,
                      std::span<std::int64_t> roots) {
  const float64x2_t a = vdupq_n_f64(static_cast<double>(form.a));
  const float64x2_t b = vdupq_n_f64(static_cast<double>(form.b));
  const float64x2_t c = vdupq_n_f64(static_cast<double>(form.c));
  const float64x2_t d = vdupq_n_f64(static_cast<double>(form.d));
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t miss = vdupq_n_f64(static_cast<double>(kMiss));
  const float64x2_t step = vdupq_n_f64(2.0);

  const auto f = static_cast<double>(first);
  const double init[2] = {f, f + 1.0};
  float64x2_t r = vld1q_f64(init);

  const std::size_t n = roots.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t t = vmulq_f64(r, r);
    const float64x2_t u = vaddq_f64(vmulq_f64(vaddq_f64(vmulq_f64(a, t), b), t), c);

    const float64x2_t w = vrndnq_f64(vdivq_f64(u, d));
    uint64x2_t ok = vceqq_f64(vmulq_f64(w, d), u);
    ok = vandq_u64(ok, vcgeq_f64(w, zero));

    const float64x2_t k = vrndnq_f64(vsqrtq_f64(vmaxq_f64(w, zero)));
    ok = vandq_u64(ok, vceqq_f64(vmulq_f64(k, k), w));

    const int64x2_t out = vcvtq_s64_f64(vbslq_f64(ok, k, miss));
    vst1q_s64(roots.data() + i, out);
    r = vaddq_f64(r, step);
  }
  if (i < n)
    square_scan_scalar(form, first + static_cast<std::int64_t>(i), roots.subspan(i));
}

}  // namespace heron::simd
