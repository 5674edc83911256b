#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "heron/prime_pairs.hpp"

using namespace heron::pairs;
using heron::arith::Integer;

namespace {

bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> brute_pairs(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= limit; p += 2)
    if (slow_prime(p) && slow_prime((p * p + 1) / 2)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> ps(const std::vector<PrimePair>& pairs) {
  std::vector<std::uint64_t> out;
  for (const auto& pr : pairs) out.push_back(pr.p.get_ui());
  return out;
}

}  // namespace

TEST_CASE("make_pair examples") {
  CHECK(make_pair(5) == PrimePair{5, 13, 5});
  CHECK(make_pair(29) == PrimePair{29, 421, 5});
  CHECK(make_pair(3) == PrimePair{3, 5, 3});
  CHECK(make_pair(739) == PrimePair{739, 273061, 3});
  CHECK_FALSE(make_pair(7).has_value());   // q = 25
  CHECK_FALSE(make_pair(9).has_value());   // p composite
  CHECK_FALSE(make_pair(2).has_value());
  CHECK_FALSE(make_pair(1).has_value());
}

TEST_CASE("scan examples") {
  CHECK(ps(scan_pairs(12)) == std::vector<std::uint64_t>{3, 5, 11});
  const auto four = scan_pairs(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0] == PrimePair{3, 5, 3});
  CHECK(scan_pairs(2).empty());
  CHECK(scan_pairs(0).empty());
  const auto eighty = ps(scan_pairs(80));
  for (std::uint64_t p : {61u, 71u, 79u}) CHECK(std::count(eighty.begin(), eighty.end(), p) == 1);
}

TEST_CASE("scan covers the reference rank-table primes") {
  const auto rows = scan_pairs(740);
  const std::vector<std::pair<std::uint64_t, unsigned>> expect{{3, 3},   {5, 5},   {11, 3}, {29, 5},
                                                               {61, 5},  {71, 7},  {79, 7}, {739, 3}};
  for (const auto& [p, cls] : expect) {
    bool found = false;
    for (const auto& r : rows)
      if (r.p == p) {
        found = true;
        CHECK(r.residue_class == cls);
        CHECK(r.q == (p * p + 1) / 2);
      }
    CHECK_MESSAGE(found, "p = " << p);
  }
}

TEST_CASE("scan matches brute force up to 10^4 and is strictly increasing") {
  for (std::uint64_t limit : {3u, 5u, 11u, 100u, 1000u, 4093u, 10000u}) {
    const auto rows = scan_pairs(limit);
    CHECK(ps(rows) == brute_pairs(limit));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].p < rows[i].p);
    for (const auto& r : rows) {
      CHECK(r.q * 2 == r.p * r.p + 1);
      CHECK(r.residue_class == r.p.get_ui() % 8);
      CHECK(r.in_theorem_scope() == (r.residue_class != 1));
    }
  }
}

TEST_CASE("worker count does not change the result") {
  const auto one = scan_pairs(300'000, 1);
  for (unsigned w : {2u, 3u, 8u}) CHECK(scan_pairs(300'000, w) == one);
  CHECK(scan_pairs(10, 8) == scan_pairs(10, 1));
}
