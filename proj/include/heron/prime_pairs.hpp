#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heron/arith.hpp"

namespace heron::pairs {

using arith::Integer;

/// A prime p >= 3 for which q = (p^2 + 1) / 2 is also prime.
struct PrimePair {
  Integer p;
  Integer q;
  unsigned residue_class = 0;  // p mod 8, one of {1, 3, 5, 7}

  /// Classes 3, 5 and 7 are certifiable; p = 1 mod 8 is reported but
  /// refused by the rank certifier.
  bool in_theorem_scope() const { return residue_class != 1; }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

std::optional<PrimePair> make_pair(const Integer& p);

/// All prime pairs with p <= limit, ascending. Primes p come from a
/// segmented sieve; q is tested individually. `workers` > 1 splits the
/// range across threads; output order does not depend on it.
std::vector<PrimePair> scan_pairs(std::uint64_t limit, unsigned workers = 1);

}  // namespace heron::pairs
