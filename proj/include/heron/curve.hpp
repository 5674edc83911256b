#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "heron/arith.hpp"
#include "heron/prime_pairs.hpp"

namespace heron::curve {

using arith::Integer;
using arith::Rational;

/// y^2 = x^3 + (p^2 - 1) x^2 - p^2 x = x (x - 1) (x + p^2).
///
/// This is the integral model of y^2 = x (x - n tau)(x + n / tau) at
/// n = p, tau = 1/p; n and tau are kept so callers can see which member of
/// the wider family they hold.
struct CurveParams {
  Integer p;
  Integer q;
  Integer n;
  Rational tau;
  Integer a2;  // p^2 - 1
  Integer a4;  // -p^2

  /// Roots of the cubic: {0, 1, -p^2}.
  std::array<Integer, 3> roots() const { return {Integer(0), Integer(1), -p * p}; }
  /// Discriminant of the cubic model, 16 * prod (e_i - e_j)^2 = 64 p^4 q^2.
  Integer discriminant() const;
  std::string equation() const;
};

CurveParams curve_from_pair(const pairs::PrimePair& pair);

/// Either the point at infinity or an affine rational point.
struct RationalPoint {
  bool infinity = true;
  Rational x;
  Rational y;

  static RationalPoint at_infinity() { return {}; }
  static RationalPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

bool is_on_curve(const RationalPoint& pt, const CurveParams& curve);

/// {O, (0,0), (1,0), (-p^2,0)}.
std::vector<RationalPoint> two_torsion(const CurveParams& curve);

bool is_two_torsion(const RationalPoint& pt, const CurveParams& curve);

/// True when ell is an odd prime not dividing 2pq.
bool is_good_prime(const CurveParams& curve, std::uint64_t ell);

/// #E(F_ell) including the point at infinity, by enumerating x and reading
/// the quadratic character of the cubic. Throws std::invalid_argument for
/// primes of bad reduction.
std::uint64_t count_points_mod(const CurveParams& curve, std::uint64_t ell);

struct TorsionVerdict {
  enum class Kind { KleinFour, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// Good primes examined, with their point counts, in scan order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  /// gcd of the observed counts; E(Q)_tors injects into every E(F_ell) for
  /// good odd ell, so its order divides this.
  std::uint64_t count_gcd = 0;
  /// Prime at which the gcd first reached 4 (0 if it never did).
  std::uint64_t witness_ell = 0;
};

/// Scans good odd primes ell <= ell_max until the gcd of #E(F_ell) drops to
/// 4. Since the full 2-torsion is rational, that pins E(Q)_tors to Z/2 x Z/2.
TorsionVerdict certify_torsion(const CurveParams& curve, std::uint64_t ell_max = 50);

}  // namespace heron::curve
