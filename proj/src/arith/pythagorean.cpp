#include "heron/arith.hpp"

#include <stdexcept>

namespace heron::arith {

PythagoreanTriple pythagorean_from(const Integer& m, const Integer& n) {
  if (n < 1 || m <= n)
    throw std::invalid_argument("pythagorean_from: need m > n >= 1");
  if (gcd(m, n) != 1) throw std::invalid_argument("pythagorean_from: m and n share a factor");
  if ((m - n) % 2 == 0) throw std::invalid_argument("pythagorean_from: m and n have equal parity");
  return {m * m - n * n, 2 * m * n, m * m + n * n};
}

std::optional<std::pair<Integer, Integer>> pythagorean_split(const Integer& hyp_num,
                                                             const Integer& hyp_den) {
  if (hyp_num < 2 || hyp_den < 1) return std::nullopt;
  // n runs over divisors of hyp_den up to its square root; m is the cofactor.
  const Integer limit = isqrt(hyp_den);
  for (Integer n = 1; n <= limit; ++n) {
    if (hyp_den % n != 0) continue;
    const Integer m = hyp_den / n;
    if (m > n && m * m + n * n == hyp_num && gcd(m, n) == 1) return std::make_pair(m, n);
  }
  return std::nullopt;
}

}  // namespace heron::arith
