#include "heron/arith.hpp"

#include <array>

namespace heron::arith {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 13> kPrimeBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > base.
bool strong_probable_prime(u64 n, u64 base) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, const Integer& base) {
  Integer d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

bool trial_division(const Integer& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  const Integer limit = isqrt(n);
  for (Integer d = 3; d <= limit; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kPrimeBases) {
    if (n % p == 0) return n == p;
  }
  // 2..37 suffice below 2^64 (Jaeschke / Feitsma-Galway).
  for (std::size_t i = 0; i < 12; ++i) {
    if (!strong_probable_prime(n, kPrimeBases[i])) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return is_prime_u64(to_u64(n));

  static const Integer kThirteenBaseBound("3317044064679887385961981", 10);
  if (n >= kThirteenBaseBound) return trial_division(n);

  for (u64 p : kPrimeBases) {
    if (n % static_cast<unsigned long>(p) == 0) return false;
  }
  for (u64 p : kPrimeBases) {
    if (!strong_probable_prime(n, from_u64(p))) return false;
  }
  return true;
}

}  // namespace heron::arith
