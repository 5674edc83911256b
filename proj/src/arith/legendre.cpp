#include "heron/arith.hpp"

#include <stdexcept>

namespace heron::arith {
namespace {

void require_odd_prime_modulus(const Integer& p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("legendre: modulus must be an odd prime, got " + p.get_str());
  for (unsigned long small : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (p != small && p % small == 0)
      throw std::invalid_argument("legendre: modulus is composite: " + p.get_str());
  }
  if (mpz_perfect_square_p(p.get_mpz_t()) != 0)
    throw std::invalid_argument("legendre: modulus is a perfect square: " + p.get_str());
}

}  // namespace

int legendre(const Integer& a, const Integer& p) {
  require_odd_prime_modulus(p);
  Integer top = mod(a, p);
  Integer bottom = p;
  int result = 1;
  while (top != 0) {
    const auto twos = mpz_scan1(top.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), twos);
    if (twos % 2 == 1) {
      const unsigned long r = mpz_fdiv_ui(bottom.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    // Reciprocity: flip when both are 3 mod 4.
    if (mpz_fdiv_ui(top.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(bottom.get_mpz_t(), 4) == 3)
      result = -result;
    std::swap(top, bottom);
    top = mod(top, bottom);
  }
  return bottom == 1 ? result : 0;
}

int legendre_euler(const Integer& a, const Integer& p) {
  require_odd_prime_modulus(p);
  const Integer residue = mod(a, p);
  if (residue == 0) return 0;
  const Integer exponent = (p - 1) / 2;
  Integer r;
  mpz_powm(r.get_mpz_t(), residue.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? 1 : -1;
}

}  // namespace heron::arith
