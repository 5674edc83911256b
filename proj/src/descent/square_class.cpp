#include <algorithm>
#include <map>
#include <stdexcept>

#include "heron/descent.hpp"

namespace heron::descent {
namespace {

// Strips every factor `prime` from n; returns the parity of the exponent.
bool strip(Integer& n, const Integer& prime) {
  bool odd = false;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t()) != 0) {
    n /= prime;
    odd = !odd;
  }
  return odd;
}

std::array<DescentPair, 4> coset_of(const DescentPair& rep, const std::vector<DescentPair>& a) {
  return {rep * a[0], rep * a[1], rep * a[2], rep * a[3]};
}

// Position of a positive odd class in (1, p, q, pq).
unsigned odd_index(const SquareClass& c) { return (c.ep ? 1u : 0u) + (c.eq ? 2u : 0u); }

const std::vector<DescentPair>& generic_torsion_image() {
  static const std::vector<DescentPair> a = {
      {SquareClass::one(), SquareClass::one()},
      {{-1, false, false, false}, {-1, false, false, false}},
      {SquareClass::one(), {1, true, false, true}},
      {{-1, false, false, false}, {-1, true, false, true}},
  };
  return a;
}

}  // namespace

std::optional<SquareClass> SquareClass::of(const Rational& value, const Integer& p,
                                           const Integer& q) {
  if (value.sign() == 0) return std::nullopt;
  Integer num = abs(value.num());
  Integer den = value.den();
  SquareClass c;
  c.sign = value.sign();
  c.e2 = strip(num, Integer(2)) != strip(den, Integer(2));
  c.ep = strip(num, p) != strip(den, p);
  c.eq = strip(num, q) != strip(den, q);
  if (!arith::int_sqrt_exact(num * den)) return std::nullopt;
  return c;
}

Integer SquareClass::value(const Integer& p, const Integer& q) const {
  Integer v = sign;
  if (e2) v *= 2;
  if (ep) v *= p;
  if (eq) v *= q;
  return v;
}

std::string SquareClass::label() const {
  std::string out = sign < 0 ? "-" : "";
  if (e2) out += "2";
  if (ep) out += "p";
  if (eq) out += "q";
  if (!e2 && !ep && !eq) out += "1";
  return out;
}

DescentPair descent_image(const curve::RationalPoint& pt, const curve::CurveParams& curve) {
  const auto& a = generic_torsion_image();
  if (pt.infinity) return a[0];
  if (pt.x == Rational(0)) return a[1];
  if (pt.x == Rational(1)) return a[2];
  auto b1 = SquareClass::of(pt.x, curve.p, curve.q);
  auto b2 = SquareClass::of(pt.x - Rational(1), curve.p, curve.q);
  if (!b1 || !b2)
    throw std::invalid_argument("descent_image: x-coordinate has bad reduction outside S");
  return {*b1, *b2};
}

std::vector<DescentPair> torsion_image(const curve::CurveParams& curve) {
  std::vector<DescentPair> out;
  for (const auto& t : curve::two_torsion(curve)) out.push_back(descent_image(t, curve));
  return out;
}

unsigned Candidate::coset_bits() const {
  const auto& r = representative;
  return (r.b1.ep ? 8u : 0u) | (r.b1.eq ? 4u : 0u) | (r.b2.ep ? 2u : 0u) | (r.b2.eq ? 1u : 0u);
}

std::vector<Candidate> candidate_pairs(const curve::CurveParams& curve) {
  const auto a = torsion_image(curve);

  std::vector<SquareClass> all;
  for (int sign : {1, -1})
    for (bool e2 : {false, true})
      for (bool ep : {false, true})
        for (bool eq : {false, true}) all.push_back({sign, e2, ep, eq});

  std::map<unsigned, Candidate> by_index;
  for (const auto& b1 : all) {
    for (const auto& b2 : all) {
      if (b1.sign * b2.sign < 0 || b1.e2) continue;
      DescentPair rep{b1, b2};
      if (rep.b1.sign < 0) rep = rep * a[1];
      if (rep.b2.e2) rep = rep * a[2];
      const unsigned index = odd_index(rep.b1) * 4 + odd_index(rep.b2);
      by_index.try_emplace(index, Candidate{index, rep, coset_of(rep, a)});
    }
  }
  std::vector<Candidate> out;
  for (auto& [index, cand] : by_index) out.push_back(std::move(cand));
  return out;
}

bool is_candidate_representative(const DescentPair& pair) {
  const auto ok = [](const SquareClass& c) { return c.sign == 1 && !c.e2; };
  return ok(pair.b1) && ok(pair.b2);
}

}  // namespace heron::descent
