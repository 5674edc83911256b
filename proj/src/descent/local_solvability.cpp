#include <limits>

#include "heron/descent.hpp"

namespace heron::descent {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 residue(const Integer& v, u64 m) { return arith::to_u64(arith::mod(v, arith::from_u64(m))); }

// Jacobi symbol (a/n) for odd n.
int jacobi(u64 a, u64 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const u64 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Odd prime power modulus ell^k.
struct PrimePower {
  u64 ell;
  unsigned k;
  u64 m;

  // (valuation capped at k, unit part mod ell); v taken mod m.
  std::pair<unsigned, u64> split(u64 v) const {
    v %= m;
    if (v == 0) return {k, 0};
    unsigned t = 0;
    while (v % ell == 0) {
      v /= ell;
      ++t;
    }
    return {t, v % ell};
  }

  // Does a r^2 = v (mod ell^k) have a solution (a unit r if requested)?
  bool solvable(u64 a, u64 v, bool unit_r) const {
    const auto [alpha, a_unit] = split(a);
    const auto [t, v_unit] = split(v);
    if (unit_r) {
      if (alpha >= k) return t >= k;
      if (t != alpha) return false;
    } else {
      if (t >= k) return true;
      if (t < alpha || (t - alpha) % 2 != 0) return false;
    }
    // a_unit * r'^2 = v_unit (mod ell), lifted by Hensel since ell is odd.
    return jacobi(mul_mod(v_unit, inverse(a_unit), ell), ell) == 1;
  }

  u64 inverse(u64 a) const {
    // ell prime: a^(ell-2).
    u64 result = 1, base = a % ell, e = ell - 2;
    while (e != 0) {
      if (e & 1) result = mul_mod(result, base, ell);
      base = mul_mod(base, base, ell);
      e >>= 1;
    }
    return result;
  }
};

struct Coefficients {
  Integer b1, b2, b12, p2;
};

Coefficients coefficients(const DescentPair& pair, const PrimePair& pp) {
  const Integer b1 = pair.b1.value(pp.p, pp.q);
  const Integer b2 = pair.b2.value(pp.p, pp.q);
  return {b1, b2, b1 * b2, pp.p * pp.p};
}

// Tuple enumeration for 2^k <= 16; gcd(r_i, s) = 1 means "not both even".
bool solvable_mod_two_power(const Coefficients& c, u64 m) {
  const u64 b1 = residue(c.b1, m), b2 = residue(c.b2, m);
  const u64 b12 = residue(c.b12, m), p2 = residue(c.p2, m);
  for (u64 s = 0; s < m; ++s) {
    for (u64 r1 = 0; r1 < m; ++r1) {
      if (s % 2 == 0 && r1 % 2 == 0) continue;
      for (u64 r2 = 0; r2 < m; ++r2) {
        if (s % 2 == 0 && r2 % 2 == 0) continue;
        if ((b1 * r1 * r1 + m * m - b2 * r2 * r2 % m - s * s % m) % m != 0) continue;
        for (u64 r3 = 0; r3 < m; ++r3) {
          if (s % 2 == 0 && r3 % 2 == 0) continue;
          if ((b1 * r1 * r1 + p2 * s * s + m * m - b12 * r3 * r3 % m) % m == 0) return true;
        }
      }
    }
  }
  return false;
}

// Homogeneous in (r1, r2, r3, s): scale s to 1 when it is a unit, else
// scale r1 to 1 (coprimality makes r1 a unit once ell | s).
std::optional<bool> solvable_mod_odd_power(const Coefficients& c, const PrimePower& pw,
                                           u64 max_iterations) {
  const u64 m = pw.m;
  const u64 b1 = residue(c.b1, m), b2 = residue(c.b2, m);
  const u64 b12 = residue(c.b12, m), p2 = residue(c.p2, m);
  u64 iterations = 0;

  for (u64 r1 = 0; r1 <= m / 2; ++r1) {
    if (++iterations > max_iterations) return std::nullopt;
    const u64 x = mul_mod(b1, mul_mod(r1, r1, m), m);
    const u64 v2 = (x + m - 1) % m;
    const u64 v3 = (x + p2) % m;
    if (pw.solvable(b2, v2, false) && pw.solvable(b12, v3, false)) return true;
  }
  for (u64 s = 0; s < m; s += pw.ell) {
    if (++iterations > max_iterations) return std::nullopt;
    const u64 s2 = mul_mod(s, s, m);
    const u64 v2 = (b1 + m - s2) % m;
    const u64 v3 = (b1 + mul_mod(p2, s2, m)) % m;
    if (pw.solvable(b2, v2, true) && pw.solvable(b12, v3, true)) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> locally_solvable(const DescentPair& pair, const PrimePair& pp, std::uint64_t ell,
                                     unsigned k, std::uint64_t max_iterations) {
  const Coefficients c = coefficients(pair, pp);
  if (ell == 2) {
    if (k == 0 || k > 4) return std::nullopt;
    return solvable_mod_two_power(c, u64{1} << k);
  }
  if (k == 0 || !arith::is_prime_u64(ell)) return std::nullopt;
  u64 m = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (m > (std::numeric_limits<u64>::max() >> 2) / ell) return std::nullopt;
    m *= ell;
  }
  return solvable_mod_odd_power(c, PrimePower{ell, k, m}, max_iterations);
}

std::optional<ObstructionReason> local_obstruction(const DescentPair& pair, const PrimePair& pp,
                                                   const LocalOptions& options) {
  struct Place {
    Integer ell;
    unsigned k;
  };
  const Place places[] = {{Integer(2), 3}, {pp.p, 1}, {pp.q, 1}, {pp.p, 2}};
  for (const auto& place : places) {
    if (mpz_sizeinbase(place.ell.get_mpz_t(), 2) > 62) continue;
    const auto result = locally_solvable(pair, pp, arith::to_u64(place.ell), place.k,
                                         options.max_iterations);
    if (result && !*result) {
      Integer modulus;
      mpz_pow_ui(modulus.get_mpz_t(), place.ell.get_mpz_t(), place.k);
      return ObstructionReason{ObstructionReason::Kind::LocalSolvability, modulus,
                               "no local solution mod " + modulus.get_str(),
                               "both equations with gcd(r_i,s) = 1 have no common residue solution modulo " +
                                   modulus.get_str()};
    }
  }
  return std::nullopt;
}

}  // namespace heron::descent
