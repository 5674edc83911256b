#pragma once

// Batch "is this value d times a perfect square" kernel. It is the inner
// loop of every exhaustive search in the project: descent witnesses and
// quartic solutions both reduce to scanning r and asking whether
//
//     u(r) = (a r^2 + b) r^2 + c
//
// equals d k^2 for an integer k >= 0.
//
// The scalar variant is the reference; it works in 128-bit integers. The
// vector variants work in doubles and are exact as long as every magnitude
// stays below 2^52 (see fits_exact). They are checked against the reference
// by tests/test_simd.cpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace heron::simd {

struct SquareScanForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;  // > 0
};

inline constexpr std::int64_t kMiss = -1;
inline constexpr std::int64_t kExactLimit = std::int64_t{1} << 52;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// True when |a| t^2 + |b| t + |c| and d stay below kExactLimit for every
/// r in [first, first + count), first >= 0.
bool fits_exact(const SquareScanForm& form, std::int64_t first, std::size_t count);

/// roots[i] = k when u(first + i) == d k^2 with k >= 0, else kMiss.
void square_scan_scalar(const SquareScanForm& form, std::int64_t first,
                        std::span<std::int64_t> roots);

#if defined(HERON_HAVE_AVX2_TU)
void square_scan_avx2(const SquareScanForm& form, std::int64_t first,
                      std::span<std::int64_t> roots);
#endif
#if defined(HERON_HAVE_NEON_TU)
void square_scan_neon(const SquareScanForm& form, std::int64_t first,
                      std::span<std::int64_t> roots);
#endif

/// Whether the running CPU (and this build) can execute `isa`.
bool isa_available(Isa isa);

/// Variant the dispatcher uses. Picked once from CPU features; the
/// HERON_SIMD environment variable ("scalar", "avx2", "neon") overrides.
Isa active_isa();

/// Test hook: pins the dispatcher to `isa` (nullopt restores autodetect).
/// Throws std::invalid_argument if the ISA is unavailable.
void force_isa(std::optional<Isa> isa);

/// Dispatches to the active variant. Requires fits_exact(form, first,
/// roots.size()); callers fall back to arbitrary precision otherwise.
void square_scan(const SquareScanForm& form, std::int64_t first, std::span<std::int64_t> roots);

}  // namespace heron::simd
