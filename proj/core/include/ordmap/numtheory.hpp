#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ordmap {

// a*b, or nullopt on unsigned 64-bit overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

// lcm(a, b) for a, b >= 1. The caller guarantees the result fits in 64 bits
// (true whenever a and b divide a common 64-bit group order).
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_odd_prime(std::uint64_t p);

// Divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// Euler totients phi(0..n) from a linear sieve, cached per process.
// The returned snapshot is immutable and safe to share across threads;
// concurrent callers may trigger at most one recomputation each.
std::shared_ptr<const std::vector<std::uint64_t>> totients_up_to(std::uint64_t n);

}  // namespace ordmap
