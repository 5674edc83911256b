#include <stdexcept>

#include "heron/descent.hpp"

namespace heron::descent {
namespace {

using Kind = ObstructionReason::Kind;

enum class Factor { One, P, Q, PQ };

Factor factor_of(const SquareClass& c) {
  if (c.ep && c.eq) return Factor::PQ;
  if (c.ep) return Factor::P;
  if (c.eq) return Factor::Q;
  return Factor::One;
}

ObstructionReason reason(Kind kind, const Integer& modulus, std::string symbol, std::string detail) {
  return {kind, modulus, std::move(symbol), std::move(detail)};
}

}  // namespace

std::string kind_name(ObstructionReason::Kind kind) {
  switch (kind) {
    case Kind::SharedPrime: return "shared-prime";
    case Kind::DivisibilityCascade: return "divisibility-cascade";
    case Kind::QuadraticResidue: return "quadratic-residue";
    case Kind::LocalSolvability: return "local-solvability";
  }
  return "unknown";
}

std::optional<ObstructionReason> lemma_obstruction(const DescentPair& pair, const PrimePair& pp) {
  const Integer& p = pp.p;
  const Integer& q = pp.q;
  const Factor f1 = factor_of(pair.b1);
  const Factor f2 = factor_of(pair.b2);

  // gcd(b1, b2) divisible by p: p | s from the first equation, then
  // p^2 | b1 r1^2 from the second, so p | r1. Same for q.
  if (pair.b1.ep && pair.b2.ep)
    return reason(Kind::SharedPrime, p * p, "p | gcd(b1,b2)",
                  "s = 0 (mod p) and b1 r1^2 = 0 (mod p^2) force p | gcd(r1,s)");
  if (pair.b1.eq && pair.b2.eq)
    return reason(Kind::SharedPrime, q * q, "q | gcd(b1,b2)",
                  "s = 0 (mod q) and b1 r1^2 = 0 (mod q^2) force q | gcd(r1,s)");

  if (f1 == Factor::One && f2 == Factor::PQ)
    return reason(Kind::DivisibilityCascade, p, "p | b2",
                  "r1^2 = pq r3^2 - p^2 s^2 = 0 (mod p), then s^2 = r1^2 - pq r2^2 = 0 (mod p)");
  if (f1 == Factor::PQ && f2 == Factor::One)
    return reason(Kind::DivisibilityCascade, q, "q | b1",
                  "pq (r1^2 - r3^2) = -p^2 s^2 gives s = 0 (mod q), then r2^2 = pq r1^2 - s^2 = 0 (mod q)");
  if (f1 == Factor::Q && f2 == Factor::One)
    return reason(Kind::DivisibilityCascade, q, "q | b1",
                  "q (r1^2 - r3^2) = -p^2 s^2 gives s = 0 (mod q), then r2^2 = q r1^2 - s^2 = 0 (mod q)");
  if (f1 == Factor::One && f2 == Factor::P)
    return reason(Kind::DivisibilityCascade, p, "p | b2",
                  "r1^2 = p r3^2 - p^2 s^2 = 0 (mod p), then s^2 = r1^2 - p r2^2 = 0 (mod p)");
  if (f1 == Factor::Q && f2 == Factor::P)
    return reason(Kind::DivisibilityCascade, p, "p | b2",
                  "q r1^2 = pq r3^2 - p^2 s^2 = 0 (mod p), then s^2 = q r1^2 - p r2^2 = 0 (mod p)");

  // 2q = p^2 + 1 = 1 (mod p), so (q/p) = (2/p) and (-q/p) = (-2/p).
  if (f1 == Factor::P && f2 == Factor::Q) {
    if (arith::legendre(Integer(2), p) == -1)
      return reason(Kind::QuadraticResidue, p, "(2/p) = -1",
                    "r1^2 - q r3^2 = -p s^2 gives 2 r1^2 = r3^2 (mod p), so p | r1, r3 and then p | s");
    if (arith::legendre(Integer(-2), p) == -1)
      return reason(Kind::QuadraticResidue, p, "(-2/p) = -1",
                    "p r1^2 - q r2^2 = s^2 gives r2^2 = -2 s^2 (mod p), so p | gcd(r2,s)");
  }
  if (f1 == Factor::P && f2 == Factor::One) {
    if (arith::legendre(p, q) == -1)
      return reason(Kind::QuadraticResidue, q, "(p/q) = -1",
                    "p r3^2 - r2^2 = 2q s^2 gives p r3^2 = r2^2 (mod q), so q | r2, r3 and then q | s");
    if (arith::legendre(Integer(-1), p) == -1)
      return reason(Kind::QuadraticResidue, p, "(-1/p) = -1",
                    "p r1^2 - r2^2 = s^2 gives r2^2 = -s^2 (mod p), so p | gcd(r2,s)");
  }
  if (f1 == Factor::One && f2 == Factor::Q) {
    if (arith::legendre(q, p) == -1 && arith::legendre(-q, p) == -1)
      return reason(Kind::QuadraticResidue, p, "(q/p) = -1, (-q/p) = -1",
                    "r1^2 - q r3^2 = -p^2 s^2 gives p | r1, r3; then -q r2^2 = s^2 (mod p) gives p | gcd(r2,s)");
  }
  return std::nullopt;
}

std::optional<ObstructionReason> obstruct(const DescentPair& pair, const PrimePair& pp,
                                          const LocalOptions& options) {
  if (!is_candidate_representative(pair))
    throw std::invalid_argument("obstruct: " + pair.label() + " is not a candidate representative");
  if (pair.b1.is_one() && pair.b2.is_one()) return std::nullopt;
  if (auto r = lemma_obstruction(pair, pp)) return r;
  return local_obstruction(pair, pp, options);
}

}  // namespace heron::descent
