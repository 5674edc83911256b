#include "heron/prime_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace heron::pairs {
namespace {

constexpr std::uint64_t kSegment = 1u << 16;

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Pairs with p in [lo, hi].
std::vector<PrimePair> scan_range(std::uint64_t lo, std::uint64_t hi,
                                  const std::vector<std::uint64_t>& sieving) {
  std::vector<PrimePair> out;
  std::vector<bool> composite;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t stop = std::min(hi, start + kSegment - 1);
    composite.assign(stop - start + 1, false);
    for (std::uint64_t prime : sieving) {
      if (prime * prime > stop) break;
      std::uint64_t first = std::max(prime * prime, (start + prime - 1) / prime * prime);
      for (std::uint64_t j = first; j <= stop; j += prime) composite[j - start] = true;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(start, 3); n <= stop; ++n) {
      if (composite[n - start] || n % 2 == 0) continue;
      if (auto pair = make_pair(arith::from_u64(n))) out.push_back(std::move(*pair));
    }
    if (stop == hi) break;
  }
  return out;
}

}  // namespace

std::optional<PrimePair> make_pair(const Integer& p) {
  if (p < 3 || p % 2 == 0 || !arith::is_prime(p)) return std::nullopt;
  Integer q = (p * p + 1) / 2;
  if (!arith::is_prime(q)) return std::nullopt;
  const auto cls = static_cast<unsigned>(mpz_fdiv_ui(p.get_mpz_t(), 8));
  return PrimePair{p, std::move(q), cls};
}

std::vector<PrimePair> scan_pairs(std::uint64_t limit, unsigned workers) {
  if (limit < 3) return {};
  const auto sieving = base_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1);
  workers = std::max(1u, workers);
  const std::uint64_t span = limit - 2;
  if (workers == 1 || span < workers * kSegment) return scan_range(3, limit, sieving);

  std::vector<std::future<std::vector<PrimePair>>> parts;
  const std::uint64_t chunk = (span + workers - 1) / workers;
  for (std::uint64_t lo = 3; lo <= limit; lo += chunk) {
    const std::uint64_t hi = std::min(limit, lo + chunk - 1);
    parts.push_back(std::async(std::launch::async, scan_range, lo, hi, std::cref(sieving)));
  }
  std::vector<PrimePair> out;
  for (auto& part : parts) {
    auto chunk_pairs = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk_pairs.begin()),
               std::make_move_iterator(chunk_pairs.end()));
  }
  return out;
}

}  // namespace heron::pairs
