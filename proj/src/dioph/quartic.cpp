#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "heron/dioph.hpp"
#include "heron/simd/square_scan.hpp"

namespace heron::dioph {
namespace {

void require_odd_prime(const Integer& p) {
  if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
    throw std::invalid_argument("p must be an odd prime, got " + p.get_str());
}

Integer quartic_rhs(const Integer& x, const Integer& y, const Integer& p) {
  const Integer sum = x * x + y * y;
  const Integer cross = 2 * p * x * y;
  return sum * sum + cross * cross;
}

std::vector<DiophSolution> scan_exact(const Integer& p, std::uint64_t bound) {
  std::vector<DiophSolution> out;
  const Integer limit = arith::from_u64(bound);
  for (Integer x = 2; x <= limit; ++x) {
    for (Integer y = 1; y < x; ++y) {
      if (arith::gcd(x, y) != 1) continue;
      if (auto z = arith::int_sqrt_exact(quartic_rhs(x, y, p))) out.push_back({x, y, *z, p});
    }
  }
  return out;
}

// In x^2 the right-hand side is t^2 + 2y^2 (1 + 2p^2) t + y^4.
std::optional<std::vector<DiophSolution>> scan_fast(const Integer& p, std::uint64_t bound) {
  if (bound < 2) return std::vector<DiophSolution>{};
  if (bound >= (std::uint64_t{1} << 26) || mpz_sizeinbase(p.get_mpz_t(), 2) > 26) return std::nullopt;
  const auto n = static_cast<std::int64_t>(bound);
  const std::int64_t pp = arith::to_i64(p);

  const auto form_for = [&](std::int64_t y) {
    return simd::SquareScanForm{1, 2 * y * y * (1 + 2 * pp * pp), y * y * y * y, 1};
  };
  // The largest coefficients occur at y = bound - 1, the largest x at bound.
  const Integer y_max = arith::from_i64(n - 1);
  const Integer b_max = 2 * y_max * y_max * (1 + 2 * p * p);
  if (b_max >= simd::kExactLimit || y_max * y_max * y_max * y_max >= simd::kExactLimit)
    return std::nullopt;
  if (!simd::fits_exact(form_for(n - 1), 1, bound)) return std::nullopt;

  std::vector<std::pair<std::int64_t, std::int64_t>> hits;  // (x, y)
  std::vector<std::int64_t> roots(bound);
  std::vector<std::int64_t> zs;
  for (std::int64_t y = 1; y < n; ++y) {
    const auto count = static_cast<std::size_t>(n - y);
    auto span = std::span(roots).first(count);
    simd::square_scan(form_for(y), y + 1, span);
    for (std::size_t i = 0; i < count; ++i) {
      if (span[i] == simd::kMiss) continue;
      const std::int64_t x = y + 1 + static_cast<std::int64_t>(i);
      if (std::gcd(x, y) != 1) continue;
      hits.emplace_back(x, y);
      zs.push_back(span[i]);
    }
  }
  std::vector<std::size_t> order(hits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return hits[l] < hits[r]; });

  std::vector<DiophSolution> out;
  for (std::size_t i : order)
    out.push_back({arith::from_i64(hits[i].first), arith::from_i64(hits[i].second), arith::from_i64(zs[i]), p});
  return out;
}

}  // namespace

bool satisfies_quartic(const DiophSolution& s) {
  return s.z >= 0 && s.z * s.z == quartic_rhs(s.x, s.y, s.p);
}

std::vector<DiophSolution> solve_quartic(const Integer& p, std::uint64_t bound,
                                         const QuarticOptions& options) {
  require_odd_prime(p);
  if (!options.force_exact_path) {
    if (auto fast = scan_fast(p, bound)) return std::move(*fast);
  }
  return scan_exact(p, bound);
}

std::optional<CorollarySolution> solve_corollary(const Integer& p) {
  require_odd_prime(p);
  // x^2 + y^2 + x^2 y^2 = p^2  <=>  (x^2 + 1)(y^2 + 1) = p^2 + 1.
  const Integer target = p * p + 1;
  for (Integer y = 1; y < p; ++y) {
    const Integer fy = y * y + 1;
    if (fy * fy > target) break;  // y <= x
    if (target % fy != 0) continue;
    auto x = arith::int_sqrt_exact(target / fy - 1);
    if (!x || *x < y) continue;

    const Integer g = arith::gcd(*x, y);
    DiophSolution induced{*x / g, y / g, (p * p + *x * *x * y * y) / (g * g), p};
    return CorollarySolution{*x, y, std::move(induced)};
  }
  return std::nullopt;
}

}  // namespace heron::dioph
