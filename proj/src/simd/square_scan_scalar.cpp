#include "heron/simd/square_scan.hpp"

#include <cmath>

namespace heron::simd {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Floor square root of v >= 0, exact for the full 128-bit range we use.
i128 isqrt128(i128 v) {
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool fits_exact(const SquareScanForm& form, std::int64_t first, std::size_t count) {
  if (first < 0 || form.d <= 0 || form.d >= kExactLimit) return false;
  if (count == 0) return true;
  const i128 last = static_cast<i128>(first) + static_cast<i128>(count) - 1;
  if (last >= (i128{1} << 26)) return false;
  const i128 t = last * last;
  if (abs128(form.a) * t >= kExactLimit) return false;
  const i128 total = abs128(form.a) * t * t + abs128(form.b) * t + abs128(form.c);
  return total < kExactLimit;
}

void square_scan_scalar(const SquareScanForm& form, std::int64_t first,
                        std::span<std::int64_t> roots) {
  const i128 a = form.a, b = form.b, c = form.c, d = form.d;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const i128 r = static_cast<i128>(first) + static_cast<i128>(i);
    const i128 t = r * r;
    const i128 u = (a * t + b) * t + c;
    std::int64_t out = kMiss;
    if (u >= 0 && u % d == 0) {
      const i128 w = u / d;
      const i128 k = isqrt128(w);
      if (k * k == w) out = static_cast<std::int64_t>(k);
    }
    roots[i] = out;
  }
}

}  // namespace heron::simd
