// Acceptance gate: one pass/fail line per criterion, exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <ordmap/conjecture.hpp>
#include <ordmap/existence.hpp>
#include <ordmap/group.hpp>
#include <ordmap/linear_map.hpp>
#include <ordmap/spectrum.hpp>

#include <cli/app.hpp>

#include "../test_support.hpp"

using namespace ordmap;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(ORDMAP_GOLDEN_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

std::string run_cli(const std::vector<std::string>& args, int& exit_code) {
  std::ostringstream out;
  std::ostringstream err;
  exit_code = cli::run(args, out, err);
  return out.str();
}

bool expect(bool condition, const std::string& message, std::string& detail) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// 1: the two built-in hexagon tables, byte-for-byte and value-by-value.
bool golden_tables(std::string& detail) {
  int code = 0;
  bool ok = expect(run_cli({"map", "dihedral", "--n", "3", "--k", "1"}, code) ==
                       read_golden("map_dihedral_n3_k1.txt") &&
                   code == 0,
                   "k=1 table deviates from the golden file", detail);
  ok &= expect(run_cli({"map", "dihedral", "--n", "3", "--k", "5"}, code) ==
                   read_golden("map_dihedral_n3_k5.txt") &&
               code == 0,
               "k=5 table deviates from the golden file", detail);

  const std::vector<std::uint64_t> domain_orders{1, 3, 3, 2, 2, 2};
  const std::vector<std::uint64_t> image_orders_k1{1, 3, 3, 6, 2, 6};
  const std::vector<std::uint64_t> image_orders_k5{1, 3, 3, 6, 6, 2};
  VerificationReport k1 = verify_map(dihedral_paper_map(3, 1), ComparisonMode::Divides);
  VerificationReport k5 = verify_map(dihedral_paper_map(3, 5), ComparisonMode::Divides);
  for (std::size_t i = 0; i < 6; ++i) {
    ok &= expect(k1.rows[i].domain_order == domain_orders[i] &&
                 k1.rows[i].image_order == image_orders_k1[i],
                 "k=1 row " + std::to_string(i) + " has wrong orders", detail);
    ok &= expect(k5.rows[i].domain_order == domain_orders[i] &&
                 k5.rows[i].image_order == image_orders_k5[i],
                 "k=5 row " + std::to_string(i) + " has wrong orders", detail);
  }
  ok &= expect(k1.verdict && k5.verdict, "a hexagon table failed verification", detail);
  return ok;
}

// 2: the dihedral construction across every half-order up to 200.
bool dihedral_sweep(std::string& detail) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t k = 1; k < 2 * n; k += 2) {
      VerificationReport report =
          verify_map(dihedral_paper_map(n, static_cast<std::int64_t>(k)), ComparisonMode::Divides);
      if (!report.verdict) {
        detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " failed";
        return false;
      }
    }
  }
  return true;
}

// 3: the product construction across all admissible (p, k, m).
bool product_sweep(std::string& detail) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint64_t k = 1; k <= 20; ++k) {
      if (std::gcd(p, k) != 1) continue;
      for (std::uint64_t m = 1; m < p; ++m) {
        if (std::gcd(m, p) != 1) continue;
        VerificationReport report =
            verify_map(product_paper_map(p, k, static_cast<std::int64_t>(m)),
                       ComparisonMode::Divides);
        if (!report.verdict) {
          detail = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                   " m=" + std::to_string(m) + " failed";
          return false;
        }
      }
    }
  }
  return true;
}

// 4: fast element orders against the iteration oracle on a catalog of
// sampled families up to order 2000, plus totient-shaped cyclic spectra.
bool order_oracle(std::string& detail) {
  std::vector<GroupSpec> catalog;
  for (std::uint64_t n = 1; n <= 50; ++n) catalog.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n : {97, 128, 243, 500, 729, 1024, 1331, 1800, 1998, 2000}) {
    catalog.push_back(GroupSpec::cyclic(n));
  }
  for (std::uint64_t n = 1; n <= 25; ++n) catalog.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t n : {50, 100, 250, 499, 500, 999, 1000}) {
    catalog.push_back(GroupSpec::dihedral(n));
  }
  for (auto moduli : std::vector<std::vector<std::uint64_t>>{
           {2, 2}, {2, 3}, {3, 6}, {4, 6}, {6, 10}, {12, 18}, {30, 60}, {44, 45},
           {3, 5, 7}, {2, 2, 2, 2}, {10, 10, 10}, {7, 7, 7}, {2, 6, 30}, {31, 62}, {40, 50}}) {
    catalog.push_back(GroupSpec::product(moduli));
  }
  for (std::uint64_t m = 2; m <= 12; ++m) catalog.push_back(GroupSpec::quaternion(m));
  for (std::uint64_t m : {25, 50, 125, 250, 500}) catalog.push_back(GroupSpec::quaternion(m));

  for (const GroupSpec& g : catalog) {
    bool mismatch = false;
    for_each_element(g, [&](const Element& e) {
      if (element_order(g, e) != test::order_by_iteration(g, e)) mismatch = true;
    });
    if (mismatch) {
      detail = "order mismatch inside a catalog group of order " + std::to_string(g.order());
      return false;
    }
  }

  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::map<std::uint64_t, std::uint64_t> expected;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) expected[d] = test::phi_by_trial_division(d);
    }
    if (order_spectrum(GroupSpec::cyclic(n)).entries() != expected) {
      detail = "cyclic spectrum deviates from phi at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 5: reflections square to the identity in every dihedral group up to 500.
bool reflections(std::string& detail) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    GroupSpec g = GroupSpec::dihedral(n);
    for (std::uint64_t b = 0; b < n; ++b) {
      Element refl = make_element(g, {1, b});
      if (element_order(g, refl) != 2 || !(multiply(g, refl, refl) == identity(g))) {
        detail = "reflection (1," + std::to_string(b) + ") misbehaves at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

// 6: two-factor products are cyclic exactly when the factors are coprime.
bool product_cyclicity(std::string& detail) {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    for (std::uint64_t m = 1; m <= 50; ++m) {
      GroupSpec g = GroupSpec::product({n, m});
      CyclicityResult result = is_cyclic(g);
      bool coprime = std::gcd(n, m) == 1;
      if (result.cyclic != coprime) {
        detail = "cyclicity wrong for {" + std::to_string(n) + "," + std::to_string(m) + "}";
        return false;
      }
      if (coprime) {
        std::vector<std::uint64_t> expected{n == 1 ? 0ull : 1ull, m == 1 ? 0ull : 1ull};
        if (!result.generator || result.generator->coords != expected ||
            element_order(g, *result.generator) != n * m) {
          detail = "generator witness wrong for {" + std::to_string(n) + "," +
                   std::to_string(m) + "}";
          return false;
        }
      }
    }
  }
  return true;
}

// 7: the flow solver and the backtracking oracle agree on every ordered
// equal-order pair, all four modes.
bool existence_oracle(std::string& detail) {
  for (std::uint64_t order = 1; order <= 24; ++order) {
    std::vector<GroupSpec> groups = test::groups_of_order(order);
    for (const GroupSpec& a : groups) {
      for (const GroupSpec& b : groups) {
        OrderSpectrum sa = order_spectrum(a);
        OrderSpectrum sb = order_spectrum(b);
        for (ComparisonMode mode : {ComparisonMode::Divides, ComparisonMode::DividedBy,
                                    ComparisonMode::Geq, ComparisonMode::Leq}) {
          if (exists_bijection(sa, sb, mode).feasible != brute_force_exists(sa, sb, mode)) {
            detail = "disagreement at order " + std::to_string(order) + ", mode " +
                     mode_name(mode);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// 8: every non-cyclic catalog group up to order 200 admits an
// order-dividing bijection onto the cyclic group of equal order, and the
// realized pairing survives an element-level recheck.
bool noncyclic_to_cyclic(std::string& detail) {
  for (std::uint64_t order = 1; order <= 200; ++order) {
    for (const GroupSpec& g : test::groups_of_order(order)) {
      if (is_cyclic(g).cyclic) continue;
      GroupSpec target = GroupSpec::cyclic(order);
      ExistenceCertificate cert =
          exists_bijection(order_spectrum(g), order_spectrum(target), ComparisonMode::Divides);
      if (!cert.feasible) {
        detail = "infeasible for a non-cyclic group of order " + std::to_string(order);
        return false;
      }
      PairingTable table = realize_bijection(g, target, cert);
      std::vector<bool> seen(order, false);
      for (const PairingRow& row : table.rows) {
        std::uint64_t src_order = element_order(g, row.source);
        std::uint64_t dst_order = element_order(target, row.target);
        std::uint64_t residue = row.target.coords[0];
        if (src_order != row.source_order || dst_order != row.target_order ||
            dst_order % src_order != 0 || seen[residue]) {
          detail = "realization recheck failed at order " + std::to_string(order);
          return false;
        }
        seen[residue] = true;
      }
      if (!table.all_hold || table.rows.size() != order) {
        detail = "realization incomplete at order " + std::to_string(order);
        return false;
      }
    }
  }
  return true;
}

// 9: the conjecture sweep over [2, 100], rechecked pair-by-pair through the
// element-level verifier, with the known n=2 counterexample present.
bool conjecture_harness(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  int code = 0;
  run_cli({"conjecture", "--n-min", "2", "--n-max", "100"}, code);
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  if (elapsed.count() >= 300) {
    detail = "sweep took " + std::to_string(elapsed.count()) + " s";
    return false;
  }
  if (code != 1) {
    detail = "sweep exit code " + std::to_string(code) + ", expected 1";
    return false;
  }

  std::vector<ConjectureReport> reports = sweep_conjecture(2, 100);
  for (const ConjectureReport& report : reports) {
    GroupSpec domain = GroupSpec::dihedral(report.n);
    std::set<std::pair<std::uint64_t, std::uint64_t>> valid;
    for (const CoefficientPair& p : report.valid_pairs) {
      VerificationReport check =
          verify_map(linear_map(domain, static_cast<std::int64_t>(p.x),
                                static_cast<std::int64_t>(p.y)),
                     ComparisonMode::Divides);
      if (!check.verdict) {
        detail = "reported pair fails recheck at n=" + std::to_string(report.n);
        return false;
      }
      valid.emplace(p.x, p.y);
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected_counterexamples;
    for (const auto& [x, y] : valid) {
      if (x == y) continue;
      VerificationReport swapped =
          verify_map(linear_map(domain, static_cast<std::int64_t>(y),
                                static_cast<std::int64_t>(x)),
                     ComparisonMode::Divides);
      if (swapped.verdict) expected_counterexamples.insert(std::minmax(x, y));
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> reported;
    for (const CoefficientPair& p : report.counterexamples) reported.emplace(p.x, p.y);
    if (reported != expected_counterexamples ||
        report.conjecture_holds != expected_counterexamples.empty()) {
      detail = "counterexample set deviates from recheck at n=" + std::to_string(report.n);
      return false;
    }
  }

  const ConjectureReport& n2 = reports.front();
  std::set<std::pair<std::uint64_t, std::uint64_t>> n2_pairs;
  for (const CoefficientPair& p : n2.counterexamples) n2_pairs.emplace(p.x, p.y);
  if (n2.n != 2 || n2_pairs.count({1, 2}) == 0) {
    detail = "n=2 is missing the {1,2} counterexample";
    return false;
  }
  return true;
}

// 10: byte determinism across repeated runs and worker counts.
bool determinism(std::string& detail) {
  int code = 0;
  std::string first = run_cli({"conjecture", "--n-min", "2", "--n-max", "60"}, code);
  std::string second = run_cli({"conjecture", "--n-min", "2", "--n-max", "60"}, code);
  std::string threaded =
      run_cli({"conjecture", "--n-min", "2", "--n-max", "60", "--jobs", "5"}, code);
  bool ok = expect(first == second, "repeated sweep output differs", detail);
  ok &= expect(first == threaded, "threaded sweep output differs", detail);

  std::string spectrum_a = run_cli({"spectrum", "Z360"}, code);
  std::string spectrum_b = run_cli({"spectrum", "Z360"}, code);
  ok &= expect(spectrum_a == spectrum_b, "repeated spectrum output differs", detail);

  std::string exists_a = run_cli({"exists", "D8", "Z8", "--realize"}, code);
  std::string exists_b = run_cli({"exists", "D8", "Z8", "--realize"}, code);
  ok &= expect(exists_a == exists_b, "repeated exists output differs", detail);
  return ok;
}

struct Criterion {
  int number;
  std::string label;
  double time_limit_ms;  // 0 = no limit enforced
  std::function<bool(std::string&)> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "built-in hexagon tables match the golden files", 1000.0, golden_tables},
      {2, "dihedral construction verifies for n <= 200, all odd k", 60000.0, dihedral_sweep},
      {3, "product construction verifies for p <= 13, k <= 20, m < p", 0.0, product_sweep},
      {4, "element orders match the iteration oracle up to order 2000", 0.0, order_oracle},
      {5, "reflections have order 2 in every dihedral group up to n = 500", 0.0, reflections},
      {6, "two-factor products are cyclic exactly for coprime factors", 0.0, product_cyclicity},
      {7, "flow feasibility equals backtracking on all pairs up to order 24", 0.0,
       existence_oracle},
      {8, "non-cyclic groups up to order 200 map onto their cyclic peers", 0.0,
       noncyclic_to_cyclic},
      {9, "conjecture sweep 2..100 is self-consistent under recheck", 300000.0,
       conjecture_harness},
      {10, "sweep output is byte-identical across runs and worker counts", 0.0, determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    if (ok && criterion.time_limit_ms > 0 && ms > criterion.time_limit_ms) {
      ok = false;
      detail = "exceeded time limit of " + std::to_string(criterion.time_limit_ms) + " ms";
    }
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.number << "  " << criterion.label
              << "  (" << static_cast<long long>(ms) << " ms)";
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
