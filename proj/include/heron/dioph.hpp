#pragma once

// Heron triangles with area p and tan(theta/2) = 1/p, and the quartic
// (x^2 + y^2)^2 + (2pxy)^2 = z^2 whose coprime solutions parametrize them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heron/arith.hpp"

namespace heron::dioph {

using arith::Integer;
using arith::Rational;

struct DiophSolution {
  Integer x, y, z;
  Integer p;
  friend bool operator==(const DiophSolution&, const DiophSolution&) = default;
};

/// Sides a, b, c with theta the angle between a and b; p is the area.
struct HeronTriangle {
  Rational a, b, c;
  Integer p;
  friend bool operator==(const HeronTriangle&, const HeronTriangle&) = default;
};

bool satisfies_quartic(const DiophSolution& s);

struct QuarticOptions {
  bool force_exact_path = false;
};

/// Every solution with 1 <= y < x <= bound and gcd(x, y) = 1, ordered by
/// (x, y). Throws std::invalid_argument unless p is an odd prime.
std::vector<DiophSolution> solve_quartic(const Integer& p, std::uint64_t bound,
                                         const QuarticOptions& options = {});

struct CorollarySolution {
  Integer x, y;            // x >= y >= 1, x^2 + y^2 + x^2 y^2 = p^2
  DiophSolution induced;   // (x, y, p^2 + x^2 y^2), reduced to gcd(x, y) = 1
};

/// Searches x, y < p (forced, since x^2 < p^2). Only the direction
/// "corollary solution => quartic solution" is provided.
std::optional<CorollarySolution> solve_corollary(const Integer& p);

/// a = (x^2 - y^2 + z) / 2xy, b = a - (x/y - y/x), c = x/y + y/x.
/// Throws std::invalid_argument unless the solution is valid with x > y.
HeronTriangle triangle_from_solution(const DiophSolution& sol);

/// Inverse of triangle_from_solution: c = w1/w2 gives (m, n) with
/// m^2 + n^2 = w1, mn = w2, and z = 2mn a - (m^2 - n^2). Sides are swapped
/// first if b > a. Throws std::invalid_argument for non-conforming input.
DiophSolution solution_from_triangle(const HeronTriangle& tri);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool isosceles = false;
  std::optional<Rational> cos_theta, sin_theta, area, tan_half;

  bool all_passed() const;
  /// First failing check, if any.
  const Check* first_failure() const;
};

/// Exact checks: positivity and strict triangle inequality, ab = 1 + p^2,
/// (a+b)^2 = c^2 + 4p^2, the law-of-cosines angle against (p^2-1)/(p^2+1),
/// sin = 2p/(ab) with sin^2 + cos^2 = 1, area p, tan(theta/2) = 1/p.
VerificationReport verify_heron(const HeronTriangle& tri);

}  // namespace heron::dioph
