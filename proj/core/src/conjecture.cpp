#include "ordmap/conjecture.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "ordmap/errors.hpp"

namespace ordmap {

namespace {

struct OrderTables {
  std::vector<std::uint64_t> cyclic;    // order of t in Z_2n
  std::vector<std::uint64_t> rotation;  // order of r^b in D_2n
};

OrderTables make_tables(std::uint64_t n) {
  OrderTables t;
  t.cyclic.resize(2 * n);
  for (std::uint64_t v = 0; v < 2 * n; ++v) {
    t.cyclic[v] = 2 * n / std::gcd(2 * n, v);
  }
  t.rotation.resize(n);
  for (std::uint64_t b = 0; b < n; ++b) {
    t.rotation[b] = n / std::gcd(n, b);
  }
  return t;
}

// Checks bijectivity and the order-dividing predicate for a*x + b*y in one
// pass over D_2n's elements. `stamp`/`epoch` implement a reusable seen-set.
bool pair_is_valid(std::uint64_t n, std::uint64_t x, std::uint64_t y, const OrderTables& t,
                   std::vector<std::uint64_t>& stamp, std::uint64_t epoch) {
  const std::uint64_t two_n = 2 * n;
  for (std::uint64_t b = 0; b < n; ++b) {  // rotations r^b
    std::uint64_t image = (y * b) % two_n;
    if (stamp[image] == epoch) return false;
    stamp[image] = epoch;
    if (t.cyclic[image] % t.rotation[b] != 0) return false;
  }
  for (std::uint64_t b = 0; b < n; ++b) {  // reflections s r^b
    std::uint64_t image = (x + y * b) % two_n;
    if (stamp[image] == epoch) return false;
    stamp[image] = epoch;
    if (t.cyclic[image] % 2 != 0) return false;
  }
  return true;
}

std::vector<CoefficientPair> valid_pairs_for(std::uint64_t n) {
  OrderTables tables = make_tables(n);
  std::vector<std::uint64_t> stamp(2 * n, 0);
  std::uint64_t epoch = 0;
  std::vector<CoefficientPair> valid;
  for (std::uint64_t x = 0; x < 2 * n; ++x) {
    for (std::uint64_t y = 0; y < 2 * n; ++y) {
      if (pair_is_valid(n, x, y, tables, stamp, ++epoch)) {
        valid.push_back(CoefficientPair{x, y, n});
      }
    }
  }
  return valid;
}

}  // namespace

std::vector<CoefficientPair> enumerate_valid_pairs(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > bound) {
    throw ResourceError("n " + std::to_string(n) + " exceeds search bound " +
                        std::to_string(bound));
  }
  return valid_pairs_for(n);
}

ConjectureReport test_conjecture(std::uint64_t n, std::uint64_t bound) {
  ConjectureReport report;
  report.n = n;
  report.degenerate = (n == 1);
  report.valid_pairs = enumerate_valid_pairs(n, bound);

  // valid_pairs is lexicographically sorted by construction, so swap
  // membership is a binary search away.
  auto is_valid = [&](std::uint64_t x, std::uint64_t y) {
    auto it = std::lower_bound(report.valid_pairs.begin(), report.valid_pairs.end(),
                               std::make_pair(x, y), [](const CoefficientPair& p, const auto& key) {
                                 return std::make_pair(p.x, p.y) < key;
                               });
    return it != report.valid_pairs.end() && it->x == x && it->y == y;
  };

  std::set<std::pair<std::uint64_t, std::uint64_t>> unordered;
  for (const CoefficientPair& p : report.valid_pairs) {
    if (p.x == p.y) {
      report.self_swapped.push_back(p);
    } else if (is_valid(p.y, p.x)) {
      unordered.insert(std::minmax(p.x, p.y));
    }
  }
  for (const auto& [x, y] : unordered) {
    report.counterexamples.push_back(CoefficientPair{x, y, n});
  }
  report.conjecture_holds = report.counterexamples.empty();
  return report;
}

std::vector<ConjectureReport> sweep_conjecture(std::uint64_t n_min, std::uint64_t n_max,
                                               unsigned jobs, std::uint64_t bound) {
  if (n_min < 2) throw DomainError("sweep requires n_min >= 2");
  if (n_min > n_max) throw DomainError("sweep requires n_min <= n_max");
  if (n_max > bound) {
    throw ResourceError("n " + std::to_string(n_max) + " exceeds search bound " +
                        std::to_string(bound));
  }
  if (jobs == 0) throw DomainError("jobs must be at least 1");

  const std::uint64_t count = n_max - n_min + 1;
  std::vector<ConjectureReport> reports(count);
  if (jobs == 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) reports[i] = test_conjecture(n_min + i, bound);
    return reports;
  }

  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += workers) {
          reports[i] = test_conjecture(n_min + i, bound);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace ordmap
