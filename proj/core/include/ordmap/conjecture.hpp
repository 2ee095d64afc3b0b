#pragma once

#include <cstdint>
#include <vector>

namespace ordmap {

// Largest n accepted by the swap-coefficient search without an explicit
// override (each n costs 4n^2 candidate pairs at up to 2n checks apiece).
inline constexpr std::uint64_t kDefaultSearchBound = 512;

// Coefficients of the candidate map s^a r^b -> x*a + y*b on D_2n -> Z_2n,
// stored reduced mod 2n.
struct CoefficientPair {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t n = 0;

  friend bool operator==(const CoefficientPair&, const CoefficientPair&) = default;
};

// Exhaustive findings for one n. valid_pairs are the (x, y) whose map is
// both bijective and order-dividing, lexicographically sorted.
// counterexamples lists unordered pairs {x, y}, x < y, where the swap of a
// valid pair is also valid, canonicalized smaller-first and deduplicated.
// Valid pairs with x == y refute the swap statement only vacuously and are
// reported separately, as is the degenerate n = 1 (y never acts).
struct ConjectureReport {
  std::uint64_t n = 0;
  bool degenerate = false;  // n == 1
  std::vector<CoefficientPair> valid_pairs;
  std::vector<CoefficientPair> counterexamples;  // canonical x < y
  std::vector<CoefficientPair> self_swapped;     // valid with x == y
  bool conjecture_holds = false;                 // counterexamples empty
};

// All (x, y) in [0,2n)^2 whose map D_2n -> Z_2n is an order-dividing
// bijection, lexicographically sorted. Uses order tables for Z_2n and
// D_2n computed once per n.
std::vector<CoefficientPair> enumerate_valid_pairs(std::uint64_t n,
                                                   std::uint64_t bound = kDefaultSearchBound);

ConjectureReport test_conjecture(std::uint64_t n, std::uint64_t bound = kDefaultSearchBound);

// One report per n in [n_min, n_max], ascending. Requires 2 <= n_min <=
// n_max <= bound. jobs > 1 distributes the n values across threads; the
// result is independent of the worker count.
std::vector<ConjectureReport> sweep_conjecture(std::uint64_t n_min, std::uint64_t n_max,
                                               unsigned jobs = 1,
                                               std::uint64_t bound = kDefaultSearchBound);

}  // namespace ordmap
