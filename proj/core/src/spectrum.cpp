#include "ordmap/spectrum.hpp"

#include <numeric>
#include <string>

#include "ordmap/errors.hpp"
#include "ordmap/numtheory.hpp"

namespace ordmap {

OrderSpectrum::OrderSpectrum(std::map<std::uint64_t, std::uint64_t> entries,
                             std::uint64_t group_order)
    : entries_(std::move(entries)), group_order_(group_order) {
  std::uint64_t total = 0;
  for (const auto& [order, count] : entries_) {
    if (order == 0 || count == 0) throw DomainError("spectrum entries must be positive");
    if (group_order_ % order != 0) {
      throw DomainError("spectrum order " + std::to_string(order) +
                        " does not divide group order " + std::to_string(group_order_));
    }
    total += count;
  }
  if (total != group_order_) {
    throw DomainError("spectrum counts sum to " + std::to_string(total) +
                      ", expected group order " + std::to_string(group_order_));
  }
  auto it = entries_.find(1);
  if (it == entries_.end() || it->second != 1) {
    throw DomainError("spectrum must contain exactly one element of order 1");
  }
}

std::uint64_t OrderSpectrum::count(std::uint64_t order) const {
  auto it = entries_.find(order);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

// {d -> phi(d)} over the divisors of n: the spectrum of Z_n.
std::map<std::uint64_t, std::uint64_t> cyclic_entries(std::uint64_t n) {
  auto phi = totients_up_to(n);
  std::map<std::uint64_t, std::uint64_t> entries;
  for (std::uint64_t d : divisors_of(n)) {
    entries[d] = (*phi)[d];
  }
  return entries;
}

std::map<std::uint64_t, std::uint64_t> product_entries(const std::vector<std::uint64_t>& moduli) {
  // Odometer over residue tuples; the order of a tuple is the lcm of its
  // component orders.
  std::map<std::uint64_t, std::uint64_t> entries;
  std::vector<std::uint64_t> residues(moduli.size(), 0);
  while (true) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      order = lcm_u64(order, moduli[i] / std::gcd(moduli[i], residues[i]));
    }
    ++entries[order];
    std::size_t slot = moduli.size();
    while (slot > 0) {
      --slot;
      if (++residues[slot] < moduli[slot]) break;
      residues[slot] = 0;
      if (slot == 0) return entries;
    }
  }
}

}  // namespace

OrderSpectrum order_spectrum(const GroupSpec& g, std::uint64_t bound) {
  if (g.order() > bound) {
    throw ResourceError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration bound " + std::to_string(bound));
  }
  switch (g.family()) {
    case Family::Cyclic:
      return OrderSpectrum(cyclic_entries(g.params()[0]), g.order());
    case Family::Dihedral: {
      // Rotations form Z_n; the n reflections all have order 2.
      std::uint64_t n = g.params()[0];
      auto entries = cyclic_entries(n);
      entries[2] += n;
      return OrderSpectrum(std::move(entries), g.order());
    }
    case Family::DirectProductCyclic:
      return OrderSpectrum(product_entries(g.params()), g.order());
    case Family::GeneralizedQuaternion: {
      // x generates Z_2m; the 2m elements x^i y square to x^m, so all have
      // order 4.
      std::uint64_t m = g.params()[0];
      auto entries = cyclic_entries(2 * m);
      entries[4] += 2 * m;
      return OrderSpectrum(std::move(entries), g.order());
    }
  }
  throw DomainError("unknown group family");
}

}  // namespace ordmap
