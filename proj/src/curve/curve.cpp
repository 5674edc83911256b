#include "heron/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace heron::curve {

Integer CurveParams::discriminant() const {
  const auto e = roots();
  Integer prod = (e[0] - e[1]) * (e[0] - e[2]) * (e[1] - e[2]);
  return 16 * prod * prod;
}

std::string CurveParams::equation() const {
  std::string out = "y^2 = x^3 + " + a2.get_str() + "x^2 - " + Integer(-a4).get_str() + "x";
  return out;
}

CurveParams curve_from_pair(const pairs::PrimePair& pair) {
  const Integer p2 = pair.p * pair.p;
  return CurveParams{pair.p, pair.q, pair.p, Rational(Integer(1), pair.p), p2 - 1, -p2};
}

bool is_on_curve(const RationalPoint& pt, const CurveParams& curve) {
  if (pt.infinity) return true;
  const Rational& x = pt.x;
  const Rational rhs = x * (x - Rational(1)) * (x + Rational(curve.p * curve.p));
  return pt.y * pt.y == rhs;
}

std::vector<RationalPoint> two_torsion(const CurveParams& curve) {
  std::vector<RationalPoint> out{RationalPoint::at_infinity()};
  for (const Integer& root : curve.roots()) out.push_back(RationalPoint::affine(Rational(root), Rational(0)));
  return out;
}

bool is_two_torsion(const RationalPoint& pt, const CurveParams& curve) {
  for (const auto& t : two_torsion(curve)) {
    if (t == pt) return true;
  }
  return false;
}

bool is_good_prime(const CurveParams& curve, std::uint64_t ell) {
  if (ell < 3 || !arith::is_prime_u64(ell)) return false;
  const unsigned long e = ell;
  return curve.p % e != 0 && curve.q % e != 0;
}

std::uint64_t count_points_mod(const CurveParams& curve, std::uint64_t ell) {
  if (!is_good_prime(curve, ell))
    throw std::invalid_argument("count_points_mod: " + std::to_string(ell) +
                                " is not an odd prime of good reduction");
  // Number of square roots of each residue: 1 for 0, 2 for nonzero squares.
  std::vector<std::uint8_t> roots(ell, 0);
  for (std::uint64_t y = 0; y < ell; ++y) ++roots[y * y % ell];

  const std::uint64_t a2 = arith::to_u64(arith::mod(curve.a2, arith::from_u64(ell)));
  const std::uint64_t a4 = arith::to_u64(arith::mod(curve.a4, arith::from_u64(ell)));
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < ell; ++x) {
    const std::uint64_t rhs = ((x * x % ell + a2 * x % ell) % ell * x % ell + a4 * x % ell) % ell;
    count += roots[rhs];
  }
  return count;
}

TorsionVerdict certify_torsion(const CurveParams& curve, std::uint64_t ell_max) {
  TorsionVerdict verdict;
  for (std::uint64_t ell = 3; ell <= ell_max; ell += 2) {
    if (!is_good_prime(curve, ell)) continue;
    const std::uint64_t count = count_points_mod(curve, ell);
    verdict.counts.emplace_back(ell, count);
    verdict.count_gcd = std::gcd(verdict.count_gcd, count);
    if (verdict.count_gcd == 4) {
      verdict.kind = TorsionVerdict::Kind::KleinFour;
      verdict.witness_ell = ell;
      break;
    }
  }
  return verdict;
}

}  // namespace heron::curve
