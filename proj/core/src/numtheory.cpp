#include "ordmap/numtheory.hpp"

#include <atomic>
#include <mutex>
#include <numeric>

namespace ordmap {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return (a / std::gcd(a, b)) * b;
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

std::shared_ptr<const std::vector<std::uint64_t>> sieve_totients(std::uint64_t n) {
  auto phi = std::make_shared<std::vector<std::uint64_t>>(n + 1, 0);
  auto& f = *phi;
  if (n >= 1) f[1] = 1;
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      f[i] = i - 1;
    }
    for (std::uint64_t p : primes) {
      if (p > n / i) break;
      composite[p * i] = true;
      if (i % p == 0) {
        f[p * i] = f[i] * p;
        break;
      }
      f[p * i] = f[i] * (p - 1);
    }
  }
  return phi;
}

std::mutex totient_mutex;
std::shared_ptr<const std::vector<std::uint64_t>> totient_cache;  // guarded by totient_mutex

}  // namespace

std::shared_ptr<const std::vector<std::uint64_t>> totients_up_to(std::uint64_t n) {
  {
    std::lock_guard<std::mutex> lock(totient_mutex);
    if (totient_cache && totient_cache->size() > n) return totient_cache;
  }
  auto fresh = sieve_totients(n);
  std::lock_guard<std::mutex> lock(totient_mutex);
  if (!totient_cache || totient_cache->size() <= n) totient_cache = fresh;
  return totient_cache;
}

}  // namespace ordmap
