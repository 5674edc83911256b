#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "heron/descent.hpp"
#include "heron/simd/square_scan.hpp"

namespace heron::descent {
namespace {

using simd::SquareScanForm;

struct Best {
  std::optional<Witness> witness;
  std::tuple<Integer, Integer, Integer> key;  // (max coordinate, s, r1)

  Integer max_coordinate() const { return std::get<0>(key); }

  void offer(Witness w) {
    Integer top = std::max({w.r1, w.r2, w.r3, w.s});
    auto k = std::make_tuple(top, w.s, w.r1);
    if (!witness || k < key) {
      key = std::move(k);
      witness = std::move(w);
    }
  }
};

bool coprime_to_s(const Witness& w) {
  return arith::gcd(w.r1, w.s) == 1 && arith::gcd(w.r2, w.s) == 1 && arith::gcd(w.r3, w.s) == 1;
}

// The equations as "d k^2 = b r1^2 + c" with d > 0:
//   b2 r2^2    = b1 r1^2 - s^2
//   b1b2 r3^2  = b1 r1^2 + p^2 s^2
struct Orientation {
  Integer b1, b2, b12, p2;
  int sign2, sign3;
};

Orientation orient(const DescentPair& pair, const PrimePair& pp) {
  Orientation o;
  o.b1 = pair.b1.value(pp.p, pp.q);
  o.b2 = pair.b2.value(pp.p, pp.q);
  o.b12 = o.b1 * o.b2;
  o.p2 = pp.p * pp.p;
  o.sign2 = sgn(o.b2);
  o.sign3 = sgn(o.b12);
  return o;
}

std::optional<Witness> search_exact(const Orientation& o, std::uint64_t bound) {
  Best best;
  const Integer limit = arith::from_u64(bound);
  for (Integer s = 1; s <= limit; ++s) {
    if (best.witness && s > best.max_coordinate()) break;
    const Integer s2 = s * s;
    const Integer r1_limit = best.witness ? std::min(limit, best.max_coordinate()) : limit;
    for (Integer r1 = 1; r1 <= r1_limit; ++r1) {
      const Integer x = o.b1 * r1 * r1;
      const Integer lhs2 = x - s2;
      if (lhs2 % o.b2 != 0) continue;
      auto r2 = arith::int_sqrt_exact(lhs2 / o.b2);
      if (!r2 || *r2 == 0 || *r2 > limit) continue;
      const Integer lhs3 = x + o.p2 * s2;
      if (lhs3 % o.b12 != 0) continue;
      auto r3 = arith::int_sqrt_exact(lhs3 / o.b12);
      if (!r3 || *r3 == 0 || *r3 > limit) continue;
      Witness w{r1, *r2, *r3, s};
      if (coprime_to_s(w)) best.offer(std::move(w));
    }
  }
  return best.witness;
}

// Vector path; nullopt from the outer optional means "does not fit".
std::optional<std::optional<Witness>> search_fast(const Orientation& o, std::uint64_t bound) {
  const auto fits64 = [](const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; };
  if (bound >= (std::uint64_t{1} << 26) || !fits64(o.b1) || !fits64(o.b12) || !fits64(o.p2))
    return std::nullopt;

  const auto n = static_cast<std::int64_t>(bound);
  const std::int64_t b1 = arith::to_i64(o.b1);
  const std::int64_t d2 = arith::to_i64(abs(o.b2));
  const std::int64_t d3 = arith::to_i64(abs(o.b12));
  const std::int64_t p2 = arith::to_i64(o.p2);

  // Worst case over the whole scan: s = r1 = bound.
  const SquareScanForm worst2{0, o.sign2 * b1, -o.sign2 * n * n, d2};
  const Integer worst_c3 = o.p2 * arith::from_i64(n) * arith::from_i64(n);
  if (!fits64(worst_c3)) return std::nullopt;
  const SquareScanForm worst3{0, o.sign3 * b1, o.sign3 * arith::to_i64(worst_c3), d3};
  if (!simd::fits_exact(worst2, 1, bound) || !simd::fits_exact(worst3, 1, bound)) return std::nullopt;

  Best best;
  std::vector<std::int64_t> roots2(bound), roots3(bound);
  for (std::int64_t s = 1; s <= n; ++s) {
    if (best.witness && s > best.max_coordinate()) break;
    const std::int64_t r1_limit =
        best.witness ? std::min<std::int64_t>(n, arith::to_i64(best.max_coordinate())) : n;
    const auto count = static_cast<std::size_t>(r1_limit);
    const SquareScanForm eq2{0, o.sign2 * b1, -o.sign2 * s * s, d2};
    const SquareScanForm eq3{0, o.sign3 * b1, o.sign3 * p2 * s * s, d3};
    simd::square_scan(eq2, 1, std::span(roots2).first(count));
    simd::square_scan(eq3, 1, std::span(roots3).first(count));
    for (std::size_t i = 0; i < count; ++i) {
      const std::int64_t r2 = roots2[i], r3 = roots3[i];
      if (r2 <= 0 || r3 <= 0 || r2 > n || r3 > n) continue;
      Witness w{arith::from_i64(static_cast<std::int64_t>(i) + 1), arith::from_i64(r2),
                arith::from_i64(r3), arith::from_i64(s)};
      if (coprime_to_s(w)) best.offer(std::move(w));
    }
  }
  return best.witness;
}

}  // namespace

bool satisfies_descent_equations(const DescentPair& pair, const Witness& w, const PrimePair& pp) {
  const Integer b1 = pair.b1.value(pp.p, pp.q);
  const Integer b2 = pair.b2.value(pp.p, pp.q);
  const Integer x = b1 * w.r1 * w.r1;
  const Integer s2 = w.s * w.s;
  return x - b2 * w.r2 * w.r2 == s2 && x - b1 * b2 * w.r3 * w.r3 == -(pp.p * pp.p) * s2;
}

std::optional<Witness> witness_search(const DescentPair& pair, const PrimePair& pp,
                                      std::uint64_t bound, const SearchOptions& options) {
  if (bound == 0) return std::nullopt;
  const Orientation o = orient(pair, pp);
  if (!options.force_exact_path) {
    if (auto fast = search_fast(o, bound)) return *fast;
  }
  return search_exact(o, bound);
}

curve::RationalPoint reconstruct_point(const DescentPair& pair, const Witness& w,
                                       const curve::CurveParams& curve) {
  const PrimePair pp{curve.p, curve.q, 0};
  if (w.s == 0 || !satisfies_descent_equations(pair, w, pp))
    throw std::invalid_argument("reconstruct_point: witness does not solve the descent equations for " +
                                pair.label());
  const Integer b1 = pair.b1.value(curve.p, curve.q);
  const Integer b2 = pair.b2.value(curve.p, curve.q);
  const Rational x = Rational(b1 * w.r1 * w.r1, w.s * w.s);
  const Rational y = Rational(b1 * b2 * w.r1 * w.r2 * w.r3, w.s * w.s * w.s);
  return curve::RationalPoint::affine(x, y);
}

}  // namespace heron::descent
