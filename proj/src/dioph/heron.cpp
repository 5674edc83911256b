#include <stdexcept>
#include <utility>

#include "heron/dioph.hpp"

namespace heron::dioph {
namespace {

Check check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

bool VerificationReport::all_passed() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

HeronTriangle triangle_from_solution(const DiophSolution& sol) {
  if (sol.y < 1 || sol.x <= sol.y)
    throw std::invalid_argument("triangle_from_solution: need x > y >= 1");
  if (arith::gcd(sol.x, sol.y) != 1)
    throw std::invalid_argument("triangle_from_solution: gcd(x, y) != 1");
  if (!satisfies_quartic(sol))
    throw std::invalid_argument("triangle_from_solution: (x, y, z) does not solve the quartic");

  const Integer two_xy = 2 * sol.x * sol.y;
  const Integer diff = sol.x * sol.x - sol.y * sol.y;
  Rational a(diff + sol.z, two_xy);
  Rational b = a - Rational(diff, sol.x * sol.y);
  Rational c(sol.x * sol.x + sol.y * sol.y, sol.x * sol.y);
  return {std::move(a), std::move(b), std::move(c), sol.p};
}

DiophSolution solution_from_triangle(const HeronTriangle& input) {
  const VerificationReport report = verify_heron(input);
  if (const Check* failed = report.first_failure())
    throw std::invalid_argument("solution_from_triangle: triangle fails check '" + failed->name +
                                "': " + failed->detail);
  HeronTriangle tri = input;
  if (tri.b > tri.a) std::swap(tri.a, tri.b);

  const auto split = arith::pythagorean_split(tri.c.num(), tri.c.den());
  if (!split)
    throw std::invalid_argument("solution_from_triangle: c = " + tri.c.to_string() +
                                " is not (m^2 + n^2)/mn for coprime m > n");
  const auto& [m, n] = *split;
  if (tri.a - tri.b != Rational(m, n) - Rational(n, m))
    throw std::invalid_argument("solution_from_triangle: a - b does not match m/n - n/m");

  const Rational z = Rational(2 * m * n) * tri.a - Rational(m * m - n * n);
  if (!z.is_integer())
    throw std::invalid_argument("solution_from_triangle: z = " + z.to_string() + " is not integral");
  DiophSolution sol{m, n, z.num(), tri.p};
  if (!satisfies_quartic(sol))
    throw std::invalid_argument("solution_from_triangle: recovered solution fails the quartic");
  return sol;
}

VerificationReport verify_heron(const HeronTriangle& tri) {
  VerificationReport r;
  const Rational& a = tri.a;
  const Rational& b = tri.b;
  const Rational& c = tri.c;
  const Rational p(tri.p);
  const Rational one(1);
  const Rational p2 = p * p;

  const bool positive = a.sign() > 0 && b.sign() > 0 && c.sign() > 0;
  r.checks.push_back(check("positive-sides", positive, "a, b, c > 0"));
  r.checks.push_back(check("triangle-inequality", positive && a + b > c && a + c > b && b + c > a,
                           "a + b = " + (a + b).to_string() + ", c = " + c.to_string()));

  const Rational ab = a * b;
  r.checks.push_back(check("ab = 1 + p^2", ab == one + p2, "ab = " + ab.to_string()));

  const Rational sum2 = (a + b) * (a + b);
  const Rational four_p2 = Rational(4) * p2;
  r.checks.push_back(check("(a+b)^2 = c^2 + 4p^2", sum2 == c * c + four_p2,
                           "(a+b)^2 - c^2 = " + (sum2 - c * c).to_string()));

  r.isosceles = a == b || b == c || a == c;
  if (!positive) return r;

  const Rational cos_t = (a * a + b * b - c * c) / (Rational(2) * ab);
  r.cos_theta = cos_t;
  const Rational cos_expected = (p2 - one) / (p2 + one);
  r.checks.push_back(check("cos(theta) = (p^2-1)/(p^2+1)", cos_t == cos_expected,
                           "cos(theta) = " + cos_t.to_string()));

  const Rational sin_t = Rational(2) * p / ab;
  r.sin_theta = sin_t;
  r.checks.push_back(check("sin(theta)^2 + cos(theta)^2 = 1", sin_t * sin_t + cos_t * cos_t == one,
                           "sin(theta) = 2p/(ab) = " + sin_t.to_string()));

  const Rational area = ab * sin_t / Rational(2);
  r.area = area;
  r.checks.push_back(check("area = p", area == p, "area = " + area.to_string()));

  const Rational denom = sum2 - c * c;
  if (denom.sign() == 0) {
    r.checks.push_back(check("tan(theta/2) = 1/p", false, "(a+b)^2 - c^2 = 0"));
    return r;
  }
  const Rational tan_half = Rational(4) * p / denom;
  r.tan_half = tan_half;
  r.checks.push_back(check("tan(theta/2) = 1/p", tan_half == one / p,
                           "4p/((a+b)^2 - c^2) = " + tan_half.to_string()));
  return r;
}

}  // namespace heron::dioph
