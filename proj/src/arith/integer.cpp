#include "heron/arith.hpp"

#include <stdexcept>

namespace heron::arith {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = int_sqrt_exact(r.num());
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Integer> int_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t to_i64(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t()) == 0)
    throw std::overflow_error("value does not fit in int64: " + n.get_str());
  // mpz_get_si is limited to long, which is 64-bit on the supported targets.
  static_assert(sizeof(long) == 8);
  return mpz_get_si(n.get_mpz_t());
}

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw std::overflow_error("value does not fit in uint64: " + n.get_str());
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(n.get_mpz_t());
}

Integer from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8);
  return Integer(static_cast<unsigned long>(v));
}

Integer from_i64(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace heron::arith
