#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "heron/descent.hpp"

using namespace heron::descent;
using heron::arith::Integer;
using heron::arith::Rational;
using heron::curve::CurveParams;
using heron::curve::RationalPoint;
using heron::pairs::make_pair;

namespace {

PrimePair pair_for(long p) { return *make_pair(p); }
CurveParams curve_for(long p) { return heron::curve::curve_from_pair(pair_for(p)); }

const SquareClass kOne = SquareClass::one();
const SquareClass kP = SquareClass::p_class();
const SquareClass kQ = SquareClass::q_class();
const SquareClass kPQ = SquareClass::pq_class();

SquareClass neg(SquareClass c) {
  c.sign = -c.sign;
  return c;
}
SquareClass two() { return {1, true, false, false}; }

std::int64_t value(const SquareClass& c, long p) {
  return c.value(Integer(p), Integer((p * p + 1) / 2)).get_si();
}

// Brute-force solvability of both equations modulo m = ell^k, with
// "ell does not divide both r_i and s" for each i.
bool brute_locally_solvable(const DescentPair& pair, long p, std::int64_t ell, std::int64_t m) {
  const std::int64_t b1 = ((value(pair.b1, p) % m) + m) % m;
  const std::int64_t b2 = ((value(pair.b2, p) % m) + m) % m;
  const std::int64_t b12 = b1 * b2 % m;
  const std::int64_t p2 = std::int64_t(p) * p % m;
  std::vector<std::int64_t> sq(m);
  for (std::int64_t r = 0; r < m; ++r) sq[r] = r * r % m;
  for (std::int64_t s = 0; s < m; ++s) {
    const bool s_div = s % ell == 0;
    for (std::int64_t r1 = 0; r1 < m; ++r1) {
      if (s_div && r1 % ell == 0) continue;
      const std::int64_t x = b1 * sq[r1] % m;
      bool ok2 = false, ok3 = false;
      for (std::int64_t r = 0; r < m && !(ok2 && ok3); ++r) {
        if (s_div && r % ell == 0) continue;
        ok2 = ok2 || (x - b2 * sq[r] % m - sq[s] + 2 * m) % m == 0;
        ok3 = ok3 || (x - b12 * sq[r] % m + p2 * sq[s] % m + 2 * m) % m == 0;
      }
      if (ok2 && ok3) return true;
    }
  }
  return false;
}

// Every solution with coordinates in [1, bound], smallest by (max, s, r1).
std::optional<Witness> brute_witness(const DescentPair& pair, long p, std::int64_t bound) {
  const Integer b1 = value(pair.b1, p), b2 = value(pair.b2, p);
  std::optional<Witness> best;
  std::tuple<Integer, Integer, Integer> best_key;
  for (std::int64_t s = 1; s <= bound; ++s)
    for (std::int64_t r1 = 1; r1 <= bound; ++r1)
      for (std::int64_t r2 = 1; r2 <= bound; ++r2) {
        if (b1 * r1 * r1 - b2 * r2 * r2 != s * s) continue;
        const Integer t = b1 * r1 * r1 + Integer(p) * p * s * s;
        if (t % (b1 * b2) != 0) continue;
        const auto r3 = heron::arith::int_sqrt_exact(t / (b1 * b2));
        if (!r3 || *r3 == 0 || *r3 > bound) continue;
        if (std::gcd(r1, s) != 1 || std::gcd(r2, s) != 1 || heron::arith::gcd(*r3, Integer(s)) != 1) continue;
        Witness w{r1, r2, *r3, s};
        auto key = std::make_tuple(std::max({w.r1, w.r2, w.r3, w.s}), w.s, w.r1);
        if (!best || key < best_key) {
          best = w;
          best_key = key;
        }
      }
  return best;
}

// Square-free class of an integer over {2, p, q} by trial division.
std::optional<SquareClass> class_by_factoring(Integer v, long p) {
  if (v == 0) return std::nullopt;
  SquareClass c;
  if (v < 0) {
    c.sign = -1;
    v = -v;
  }
  const long q = (p * p + 1) / 2;
  for (long f = 2; Integer(f) * f <= v; ++f) {
    int e = 0;
    while (v % f == 0) {
      v /= f;
      ++e;
    }
    if (e % 2 == 0) continue;
    if (f == 2) c.e2 = true;
    else if (f == p) c.ep = true;
    else if (f == q) c.eq = true;
    else return std::nullopt;
  }
  if (v > 1) {
    if (v == 2) c.e2 = !c.e2;
    else if (v == p) c.ep = !c.ep;
    else if (v == q) c.eq = !c.eq;
    else return std::nullopt;
  }
  return c;
}

std::optional<SquareClass> class_of_rational(const Rational& r, long p) {
  auto a = class_by_factoring(r.num(), p);
  auto b = class_by_factoring(r.den(), p);
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

}  // namespace

TEST_CASE("square classes") {
  const Integer p = 3, q = 5;
  CHECK(SquareClass::of(Rational(Integer(9), Integer(4)), p, q) == kOne);
  CHECK(SquareClass::of(Rational(-10), p, q) == neg(two() * kQ));
  CHECK(SquareClass::of(Rational(Integer(5), Integer(12)), p, q) == kP * kQ);
  CHECK_FALSE(SquareClass::of(Rational(7), p, q).has_value());
  CHECK_FALSE(SquareClass::of(Rational(0), p, q).has_value());
  CHECK(neg(two() * kPQ).label() == "-2pq");
  CHECK(kOne.label() == "1");
  CHECK(kPQ.value(p, q) == 15);
  CHECK(neg(two() * kQ).value(p, q) == -10);
}

TEST_CASE("torsion image") {
  const auto c = curve_for(3);
  const auto pts = heron::curve::two_torsion(c);
  const auto q2 = two() * kQ;
  CHECK(descent_image(RationalPoint::at_infinity(), c) == DescentPair{kOne, kOne});
  CHECK(descent_image(RationalPoint::affine(0, 0), c) == DescentPair{neg(kOne), neg(kOne)});
  CHECK(descent_image(RationalPoint::affine(1, 0), c) == DescentPair{kOne, q2});
  CHECK(descent_image(RationalPoint::affine(-9, 0), c) == DescentPair{neg(kOne), neg(q2)});

  for (long p : {3L, 5L, 11L, 29L}) {
    const auto cp = curve_for(p);
    const auto a = torsion_image(cp);
    REQUIRE(a.size() == 4);
    for (const auto& pt : heron::curve::two_torsion(cp))
      CHECK(std::count(a.begin(), a.end(), descent_image(pt, cp)) == 1);
    for (const auto& x : a)
      for (const auto& y : a) CHECK(std::count(a.begin(), a.end(), x * y) == 1);  // A is a group
  }
}

TEST_CASE("image of (9, 36) on the p = 3 curve") {
  const auto c = curve_for(3);
  const auto img = descent_image(RationalPoint::affine(9, 36), c);
  CHECK(img == DescentPair{kOne, two()});
  const auto cands = candidate_pairs(c);
  bool found = false;
  for (const auto& cand : cands)
    if (std::count(cand.coset.begin(), cand.coset.end(), img) == 1) {
      found = true;
      CHECK(cand.representative == DescentPair{kOne, kQ});
    }
  CHECK(found);
}

TEST_CASE("descent map agrees with factoring on affine points") {
  // Multiples-free check: x and x - 1 read directly.
  const auto c = curve_for(3);
  const RationalPoint pts[] = {RationalPoint::affine(9, 36),
                               RationalPoint::affine(Rational(Integer(9), Integer(4)), Rational(Integer(45), Integer(8)))};
  for (const auto& pt : pts) {
    REQUIRE(heron::curve::is_on_curve(pt, c));
    const auto img = descent_image(pt, c);
    CHECK(img.b1 == *class_of_rational(pt.x, 3));
    CHECK(img.b2 == *class_of_rational(pt.x - Rational(1), 3));
  }
}

TEST_CASE("candidate representatives") {
  for (long p : {3L, 5L, 11L}) {
    const auto c = curve_for(p);
    const auto cands = candidate_pairs(c);
    REQUIRE(cands.size() == 16);
    CHECK(cands[0].representative == DescentPair{kOne, kOne});
    std::set<unsigned> bits;
    std::set<std::string> all_members;
    for (unsigned i = 0; i < cands.size(); ++i) {
      const auto& cand = cands[i];
      CHECK(cand.index == i);
      bits.insert(cand.coset_bits());
      CHECK(cand.coset[0] == cand.representative);
      CHECK(is_candidate_representative(cand.representative));
      const auto a = torsion_image(c);
      for (const auto& t : a) {
        const auto m = cand.representative * t;
        CHECK(std::count(cand.coset.begin(), cand.coset.end(), m) == 1);
      }
      for (const auto& m : cand.coset) {
        all_members.insert(m.label());
        CHECK(value(m.b1, p) * value(m.b2, p) > 0);
        CHECK(value(m.b1, p) % 2 != 0);
      }
      const auto& r = cand.representative;
      CHECK(r.b1.sign == 1);
      CHECK(r.b2.sign == 1);
      CHECK_FALSE(r.b1.e2);
      CHECK_FALSE(r.b2.e2);
    }
    CHECK(bits.size() == 16);
    CHECK(all_members.size() == 64);
    const auto has = [&](DescentPair d) {
      return std::any_of(cands.begin(), cands.end(), [&](const Candidate& x) { return x.representative == d; });
    };
    CHECK(has({kOne, kQ}));
    CHECK_FALSE(has({two(), kP}));
    CHECK_FALSE(is_candidate_representative({two(), kP}));
  }
}

TEST_CASE("obstruction examples") {
  const auto pp5 = pair_for(5);
  const auto r = obstruct({kP, kQ}, pp5);
  REQUIRE(r.has_value());
  CHECK(r->symbol == "(2/p) = -1");
  CHECK(r->kind == ObstructionReason::Kind::QuadraticResidue);
  CHECK(obstruct({kOne, kQ}, pp5).has_value());
  CHECK_FALSE(obstruct({kOne, kQ}, pair_for(3)).has_value());
  CHECK_FALSE(obstruct({kOne, kOne}, pp5).has_value());
  CHECK_THROWS_AS(obstruct({two(), kP}, pp5), std::invalid_argument);
  CHECK_THROWS_AS(obstruct({neg(kOne), neg(kOne)}, pp5), std::invalid_argument);
}

TEST_CASE("every non-identity coset is obstructed for p = 5 mod 8") {
  for (long p : {5L, 29L, 61L, 101L}) {
    REQUIRE(make_pair(p));
    const auto pp = pair_for(p);
    for (const auto& cand : candidate_pairs(heron::curve::curve_from_pair(pp))) {
      if (cand.index == 0) continue;
      CHECK_MESSAGE(obstruct(cand.representative, pp).has_value(), "p=" << p << " " << cand.representative.label());
    }
  }
}

TEST_CASE("local solvability matches brute-force congruences") {
  struct Case {
    long p;
    std::int64_t ell;
    unsigned k;
  };
  const Case cases[] = {{3, 2, 1},  {3, 2, 2},  {3, 2, 3},  {3, 2, 4},  {3, 3, 1},  {3, 3, 2},  {3, 3, 3},
                        {3, 5, 1},  {3, 5, 2},  {3, 7, 1},  {5, 2, 3},  {5, 5, 1},  {5, 5, 2},  {5, 13, 1},
                        {5, 3, 2},  {11, 11, 1}, {11, 61, 1}, {11, 11, 2}, {19, 19, 1}, {29, 29, 1}};
  for (const auto& cs : cases) {
    std::int64_t m = 1;
    for (unsigned i = 0; i < cs.k; ++i) m *= cs.ell;
    const auto c = curve_for(cs.p);
    for (const auto& cand : candidate_pairs(c)) {
      for (const auto& member : cand.coset) {
        const auto got = locally_solvable(member, pair_for(cs.p), cs.ell, cs.k);
        REQUIRE(got.has_value());
        REQUIRE_MESSAGE(*got == brute_locally_solvable(member, cs.p, cs.ell, m),
                        "p=" << cs.p << " mod " << m << " " << member.label());
      }
    }
  }
}

TEST_CASE("local solvability cap and bad arguments") {
  const auto pp = pair_for(739);
  // A capped run either matches the full answer or reports nothing.
  unsigned capped = 0;
  for (const auto& cand : candidate_pairs(curve_for(29)))
    for (std::uint64_t ell : {29u, 421u}) {
      const auto full = locally_solvable(cand.representative, pair_for(29), ell, 1);
      const auto cut = locally_solvable(cand.representative, pair_for(29), ell, 1, 3);
      REQUIRE(full.has_value());
      if (cut) CHECK(*cut == *full);
      else ++capped;
    }
  CHECK(capped > 0);
  CHECK_FALSE(locally_solvable({kOne, kQ}, pp, 2, 5).has_value());
  CHECK_FALSE(locally_solvable({kOne, kQ}, pp, 9, 1).has_value());
}

TEST_CASE("witness examples") {
  const auto pp3 = pair_for(3);
  const auto w = witness_search({kOne, kQ}, pp3, 10);
  REQUIRE(w.has_value());
  CHECK(*w == Witness{3, 1, 3, 2});
  CHECK_FALSE(witness_search({kOne, kQ}, pp3, 2).has_value());
  CHECK_FALSE(witness_search({kP, kQ}, pair_for(5), 1000).has_value());
  CHECK_FALSE(witness_search({kOne, kQ}, pp3, 0).has_value());
}

TEST_CASE("witness search matches exhaustive minimum") {
  for (long p : {3L, 5L, 11L}) {
    const auto pp = pair_for(p);
    for (const auto& cand : candidate_pairs(curve_for(p)))
      for (const auto& member : cand.coset) {
        const auto want = brute_witness(member, p, 60);
        CHECK_MESSAGE(witness_search(member, pp, 60) == want, "p=" << p << " " << member.label());
      }
  }
}

TEST_CASE("fast and exact witness paths agree") {
  for (long p : {3L, 5L, 11L, 29L, 71L}) {
    const auto pp = pair_for(p);
    for (const auto& cand : candidate_pairs(curve_for(p)))
      for (const auto& member : cand.coset) {
        const auto fast = witness_search(member, pp, 150);
        const auto exact = witness_search(member, pp, 150, SearchOptions{true});
        CHECK_MESSAGE(fast == exact, "p=" << p << " " << member.label());
        if (fast) CHECK(satisfies_descent_equations(member, *fast, pp));
      }
  }
}

TEST_CASE("reconstruct examples") {
  const auto c = curve_for(3);
  const auto pt = reconstruct_point({kOne, kQ}, {3, 1, 3, 2}, c);
  CHECK(pt == RationalPoint::affine(Rational(Integer(9), Integer(4)), Rational(Integer(45), Integer(8))));
  CHECK(heron::curve::is_on_curve(pt, c));
  CHECK(descent_image(pt, c) == DescentPair{kOne, kQ});
  CHECK_THROWS_AS(reconstruct_point({kOne, kQ}, {1, 1, 1, 1}, c), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_point({kOne, kQ}, {3, 1, 3, 0}, c), std::invalid_argument);
}

TEST_CASE("witnesses reconstruct to points in the right class") {
  for (long p : {3L, 11L}) {
    const auto pp = pair_for(p);
    const auto c = curve_for(p);
    for (const auto& cand : candidate_pairs(c))
      for (const auto& member : cand.coset) {
        const auto w = witness_search(member, pp, 80);
        if (!w) continue;
        const auto pt = reconstruct_point(member, *w, c);
        CHECK(heron::curve::is_on_curve(pt, c));
        CHECK(descent_image(pt, c) == member);
        CHECK(*class_of_rational(pt.x, p) == member.b1);
      }
  }
}

TEST_CASE("rank examples") {
  for (long p : {5L, 29L}) {
    const auto r = rank_bounds(pair_for(p));
    CHECK(r.lower == 0);
    CHECK(r.upper == 0);
    CHECK(r.certified);
    CHECK(r.image_size_bound == 4);
    CHECK(r.torsion.kind == heron::curve::TorsionVerdict::Kind::KleinFour);
  }
  RankOptions opts;
  opts.search_bound = 10;
  const auto r3 = rank_bounds(pair_for(3), opts);
  CHECK(r3.lower == 1);
  CHECK(r3.upper == 1);
  CHECK(r3.certified);
  CHECK(r3.image_size_bound == 8);
  const auto r11 = rank_bounds(pair_for(11), RankOptions{});
  CHECK(r11.lower == 1);
  CHECK(r11.upper == 1);
  CHECK_THROWS_AS(rank_bounds(*make_pair(409)), OutOfScope);
}

TEST_CASE("rank bounds bracket and match the coset verdicts") {
  for (const auto& pp : heron::pairs::scan_pairs(300)) {
    if (!pp.in_theorem_scope()) continue;
    RankOptions opts;
    opts.search_bound = 60;
    const auto r = rank_bounds(pp, opts);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.outcomes.size() == 16);
    unsigned survivors = 0;
    for (const auto& o : r.outcomes) {
      using V = DescentOutcome::Verdict;
      CHECK((o.verdict == V::InTorsionImage) == (o.candidate.index == 0));
      if (o.verdict == V::Obstructed) CHECK(o.reason.has_value());
      if (o.verdict == V::Witnessed) {
        REQUIRE(o.point.has_value());
        CHECK(descent_image(*o.point, heron::curve::curve_from_pair(pp)) == o.witnessed_pair);
      }
      if (o.verdict == V::Witnessed || o.verdict == V::Unresolved) ++survivors;
    }
    CHECK((std::uint64_t{1} << r.upper) >= survivors + 1);
    CHECK((r.upper == 0 || (std::uint64_t{1} << (r.upper - 1)) < survivors + 1));
    CHECK(r.image_size_bound == (std::uint64_t{4} << r.upper));
    const auto w = rank_bounds(pp, RankOptions{60, 50, {}, {}, 4});
    CHECK(w.lower == r.lower);
    CHECK(w.upper == r.upper);
  }
}
