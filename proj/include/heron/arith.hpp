#pragma once

// Exact integer and rational primitives. Integers are GMP-backed and
// unbounded; every other module builds on these.

#include <cstdint>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace heron::arith {

using Integer = mpz_class;

/// Canonical rational number: denominator >= 1, gcd(|num|, den) == 1,
/// sign carried by the numerator, zero stored as 0/1.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& e) : value_(Integer(e)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "a" or "a/b" in decimal.
  static Rational parse(const std::string& text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  std::string to_string() const { return value_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_;
};

/// Exact square root of a non-negative rational, if it is a square.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

// ---------------------------------------------------------------------------
// Primality

/// Deterministic strong-probable-prime test for 64-bit inputs with the
/// first twelve prime bases (2..37); proven correct for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Deterministic primality for any natural n.
///   n < 2^64               -> is_prime_u64
///   n < 3317044064679887385961981 -> strong tests to the first 13 prime
///                             bases (proven bound, Sorenson & Webster)
///   larger                 -> trial division (exact, slow; never reached
///                             for p below ~2.5e12 in the curve family)
bool is_prime(const Integer& n);

// ---------------------------------------------------------------------------
// Quadratic residues

/// Legendre symbol (a/p) via the Jacobi reciprocity recursion.
/// Throws std::invalid_argument for p < 3, even p, or p caught composite by
/// a cheap check (small factor or perfect square).
int legendre(const Integer& a, const Integer& p);

/// Legendre symbol via Euler's criterion a^((p-1)/2) mod p. Same contract.
int legendre_euler(const Integer& a, const Integer& p);

// ---------------------------------------------------------------------------
// Integer helpers

/// r with r*r == n, or nullopt when n is negative or not a perfect square.
std::optional<Integer> int_sqrt_exact(const Integer& n);

/// Floor square root of a non-negative integer.
Integer isqrt(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Converts to a 64-bit value, throwing std::overflow_error when it does not fit.
std::int64_t to_i64(const Integer& n);
std::uint64_t to_u64(const Integer& n);

Integer from_u64(std::uint64_t v);
Integer from_i64(std::int64_t v);

// ---------------------------------------------------------------------------
// Pythagorean triples

struct PythagoreanTriple {
  Integer leg_odd;   // m^2 - n^2
  Integer leg_even;  // 2mn
  Integer hyp;       // m^2 + n^2
  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

/// (m^2 - n^2, 2mn, m^2 + n^2) for coprime m > n >= 1 of opposite parity.
/// Throws std::invalid_argument otherwise.
PythagoreanTriple pythagorean_from(const Integer& m, const Integer& n);

/// Coprime m > n >= 1 with m^2 + n^2 == hyp_num and m*n == hyp_den, found
/// by walking the complementary divisor pairs of hyp_den. hyp_num/hyp_den
/// must be in lowest terms. Intended for small denominators.
std::optional<std::pair<Integer, Integer>> pythagorean_split(const Integer& hyp_num,
                                                             const Integer& hyp_den);

}  // namespace heron::arith
