#pragma once

// Explicit 2-descent on y^2 = x (x - 1)(x + p^2).
//
// The descent map sends a point P = (x, y) to the pair of square classes
// (x, x - 1) in Q(S,2) x Q(S,2), S = {2, p, q, inf}, with special values at
// the 2-torsion. A pair (b1, b2) outside the torsion image is hit by some
// point iff
//
//     b1 r1^2 -    b2 r2^2 =        s^2
//     b1 r1^2 - b1 b2 r3^2 = -p^2 * s^2
//
// has a solution in nonzero integers with gcd(r_i, s) = 1 for i = 1, 2, 3.
// The image is a group of order 2^(rank + 2).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heron/arith.hpp"
#include "heron/curve.hpp"
#include "heron/prime_pairs.hpp"

namespace heron::descent {

using arith::Integer;
using arith::Rational;
using pairs::PrimePair;

/// sign * 2^e2 * p^ep * q^eq, a square-free representative of a class in
/// Q*/(Q*)^2 supported on {2, p, q, inf}. The group law is XOR on the
/// exponent bits and multiplication of signs.
struct SquareClass {
  int sign = 1;
  bool e2 = false;
  bool ep = false;
  bool eq = false;

  static SquareClass one() { return {}; }
  static SquareClass p_class() { return {1, false, true, false}; }
  static SquareClass q_class() { return {1, false, false, true}; }
  static SquareClass pq_class() { return {1, false, true, true}; }

  /// Class of a nonzero rational, or nullopt if some prime outside {2,p,q}
  /// divides it to an odd power.
  static std::optional<SquareClass> of(const Rational& value, const Integer& p, const Integer& q);

  Integer value(const Integer& p, const Integer& q) const;
  bool is_one() const { return sign == 1 && !e2 && !ep && !eq; }

  /// "1", "-2pq", ...
  std::string label() const;

  friend SquareClass operator*(SquareClass a, SquareClass b) {
    return {a.sign * b.sign, a.e2 != b.e2, a.ep != b.ep, a.eq != b.eq};
  }
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

struct DescentPair {
  SquareClass b1;
  SquareClass b2;

  std::string label() const { return "(" + b1.label() + "," + b2.label() + ")"; }

  friend DescentPair operator*(const DescentPair& a, const DescentPair& b) {
    return {a.b1 * b.b1, a.b2 * b.b2};
  }
  friend bool operator==(const DescentPair&, const DescentPair&) = default;
};

/// Image of a point under the descent map.
DescentPair descent_image(const curve::RationalPoint& pt, const curve::CurveParams& curve);

/// A = {(1,1), (-1,-1), (1,2q), (-1,-2q)}: images of O, (0,0), (1,0), (-p^2,0).
std::vector<DescentPair> torsion_image(const curve::CurveParams& curve);

/// One A-coset of admissible pairs, named by its representative with
/// b1, b2 in {1, p, q, pq}.
struct Candidate {
  unsigned index = 0;  // 0..15, (1,1) first
  DescentPair representative;
  std::array<DescentPair, 4> coset;  // representative first

  /// Bits (p|b1, q|b1, p|b2, q|b2): coordinates of the coset in Im/A.
  unsigned coset_bits() const;
};

/// The 16 A-cosets that can meet the image: of the 256 pairs keep those
/// with b1 b2 > 0 and b1 odd, then reduce modulo A.
std::vector<Candidate> candidate_pairs(const curve::CurveParams& curve);

/// Whether `pair` is one of the 16 representatives.
bool is_candidate_representative(const DescentPair& pair);

// ---------------------------------------------------------------------------
// Obstructions

struct ObstructionReason {
  enum class Kind {
    SharedPrime,          // a prime divides gcd(b1, b2)
    DivisibilityCascade,  // a prime is forced into both r_i and s
    QuadraticResidue,     // a Legendre symbol forbids the residue
    LocalSolvability,     // no admissible solution modulo a prime power
  };
  Kind kind;
  Integer modulus;
  std::string symbol;  // e.g. "(2/p) = -1"
  std::string detail;  // the residue contradiction
};

std::string kind_name(ObstructionReason::Kind kind);

struct LocalOptions {
  /// Iteration cap per modulus. Exceeding it leaves the modulus
  /// inconclusive (never obstructing), so the cap only affects strength.
  std::uint64_t max_iterations = 20'000'000;
};

/// Divisibility and quadratic-residue arguments, each tied to one of the
/// 15 non-identity representatives.
std::optional<ObstructionReason> lemma_obstruction(const DescentPair& pair, const PrimePair& pp);

/// Generic fallback: solvability of both equations as congruences modulo
/// 8, p, q and p^2, with gcd(r_i, s) = 1 enforced locally.
std::optional<ObstructionReason> local_obstruction(const DescentPair& pair, const PrimePair& pp,
                                                   const LocalOptions& options = {});

/// lemma_obstruction, then local_obstruction. Throws std::invalid_argument
/// for pairs outside the 16 representatives; (1,1) is never obstructed.
std::optional<ObstructionReason> obstruct(const DescentPair& pair, const PrimePair& pp,
                                          const LocalOptions& options = {});

/// Local solvability modulo ell^k (ell prime; ell = 2 is supported for
/// 2^k <= 16). Result is nullopt when the iteration cap was hit.
std::optional<bool> locally_solvable(const DescentPair& pair, const PrimePair& pp,
                                     std::uint64_t ell, unsigned k,
                                     std::uint64_t max_iterations = 20'000'000);

// ---------------------------------------------------------------------------
// Witnesses

struct Witness {
  Integer r1, r2, r3, s;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Residuals of both descent equations; a solution has both zero.
bool satisfies_descent_equations(const DescentPair& pair, const Witness& w, const PrimePair& pp);

struct SearchOptions {
  /// Skip the vector kernels and run the arbitrary-precision loop.
  bool force_exact_path = false;
};

/// Smallest solution by (max coordinate, s, r1) with all coordinates in
/// [1, bound], positive representatives, and gcd(r_i, s) = 1.
std::optional<Witness> witness_search(const DescentPair& pair, const PrimePair& pp,
                                      std::uint64_t bound, const SearchOptions& options = {});

/// (b1 (r1/s)^2, b1 b2 r1 r2 r3 / s^3). Throws std::invalid_argument when
/// the witness does not satisfy the descent equations.
curve::RationalPoint reconstruct_point(const DescentPair& pair, const Witness& w,
                                       const curve::CurveParams& curve);

// ---------------------------------------------------------------------------
// Rank certificate

struct DescentOutcome {
  enum class Verdict { InTorsionImage, Obstructed, Witnessed, Unresolved };
  Candidate candidate;
  Verdict verdict = Verdict::Unresolved;
  std::optional<ObstructionReason> reason;
  std::optional<Witness> witness;
  DescentPair witnessed_pair;       // coset member the witness solves
  std::optional<curve::RationalPoint> point;
  std::uint64_t search_bound = 0;
};

std::string verdict_name(DescentOutcome::Verdict v);

struct RankResult {
  PrimePair pair;
  unsigned lower = 0;
  unsigned upper = 0;
  bool certified = false;
  std::uint64_t image_size_bound = 4;
  curve::TorsionVerdict torsion;
  std::vector<DescentOutcome> outcomes;  // candidate order
};

struct RankOptions {
  std::uint64_t search_bound = 1000;
  std::uint64_t torsion_ell_max = 50;
  LocalOptions local;
  SearchOptions search;
  unsigned workers = 1;
};

/// Raised for p = 1 mod 8, which the certifier does not handle.
class OutOfScope : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a witness fails its exact recheck.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Obstructs every non-identity coset it can, searches witnesses for the
/// rest, and brackets the rank.
///
///   upper: the image is a subgroup of Q(S,2)^2 containing A, so with N
///          unobstructed non-identity cosets #Im <= 4 * 2^k where 2^k is
///          the least power of two >= N + 1; upper = k.
///   lower: F2-rank of the witnessed cosets.
RankResult rank_bounds(const PrimePair& pp, const RankOptions& options = {});

}  // namespace heron::descent
