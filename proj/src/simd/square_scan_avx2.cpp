// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "heron/simd/square_scan.hpp"

namespace heron::simd {

void square_scan_avx2(const SquareScanForm& form, std::int64_t first,
                      std::span<std::int64_t> roots) {
  const __m256d a = _mm256_set1_pd(static_cast<double>(form.a));
  const __m256d b = _mm256_set1_pd(static_cast<double>(form.b));
  const __m256d c = _mm256_set1_pd(static_cast<double>(form.c));
  const __m256d d = _mm256_set1_pd(static_cast<double>(form.d));
  const __m256d zero = _mm256_setzero_pd();
  const __m256d miss = _mm256_set1_pd(static_cast<double>(kMiss));
  const __m256d step = _mm256_set1_pd(4.0);
  constexpr int kRound = _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC;

  const auto f = static_cast<double>(first);
  __m256d r = _mm256_setr_pd(f, f + 1.0, f + 2.0, f + 3.0);

  const std::size_t n = roots.size();
  std::size_t i = 0;
  alignas(32) double lane[4];
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_mul_pd(r, r);
    const __m256d u = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(a, t), b), t), c);

    // u == d * w for integral w >= 0 (all operands exact below 2^52).
    const __m256d w = _mm256_round_pd(_mm256_div_pd(u, d), kRound);
    __m256d ok = _mm256_cmp_pd(_mm256_mul_pd(w, d), u, _CMP_EQ_OQ);
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(w, zero, _CMP_GE_OQ));

    // Correctly rounded sqrt of a perfect square below 2^52 is exact.
    const __m256d k = _mm256_round_pd(_mm256_sqrt_pd(_mm256_max_pd(w, zero)), kRound);
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(_mm256_mul_pd(k, k), w, _CMP_EQ_OQ));

    _mm256_store_pd(lane, _mm256_blendv_pd(miss, k, ok));
    for (int j = 0; j < 4; ++j) roots[i + j] = static_cast<std::int64_t>(lane[j]);
    r = _mm256_add_pd(r, step);
  }
  if (i < n)
    square_scan_scalar(form, first + static_cast<std::int64_t>(i), roots.subspan(i));
}

}  // namespace heron::simd
