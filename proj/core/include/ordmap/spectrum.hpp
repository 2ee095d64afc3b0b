#pragma once

#include <cstdint>
#include <map>

#include "ordmap/group.hpp"

namespace ordmap {

// Multiset of element orders of a finite group: order -> count.
// Invariants checked at construction: counts are positive, exactly one
// element of order 1, every order divides the group order, counts sum to
// the group order.
class OrderSpectrum {
 public:
  OrderSpectrum(std::map<std::uint64_t, std::uint64_t> entries, std::uint64_t group_order);

  const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t group_order() const { return group_order_; }
  std::uint64_t count(std::uint64_t order) const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> entries_;
  std::uint64_t group_order_;
};

// Exact order spectrum. Cyclic groups use the closed form {d -> phi(d)}
// over the divisors of n; dihedral and quaternion groups combine the
// spectrum of their cyclic part with the reflection/odd-coset counts;
// products enumerate tuples and take lcm orders.
OrderSpectrum order_spectrum(const GroupSpec& g,
                             std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace ordmap
