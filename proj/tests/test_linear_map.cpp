#include <doctest.h>

#include <numeric>
#include <vector>

#include <ordmap/errors.hpp>
#include <ordmap/linear_map.hpp>

#include "test_support.hpp"

using namespace ordmap;

namespace {

std::vector<std::uint64_t> images_of(const VerificationReport& report) {
  std::vector<std::uint64_t> out;
  for (const VerificationRow& row : report.rows) out.push_back(row.image);
  return out;
}

std::vector<std::uint64_t> domain_orders_of(const VerificationReport& report) {
  std::vector<std::uint64_t> out;
  for (const VerificationRow& row : report.rows) out.push_back(row.domain_order);
  return out;
}

std::vector<std::uint64_t> image_orders_of(const VerificationReport& report) {
  std::vector<std::uint64_t> out;
  for (const VerificationRow& row : report.rows) out.push_back(row.image_order);
  return out;
}

}  // namespace

TEST_CASE("comparison modes name and evaluate correctly") {
  CHECK(mode_holds(ComparisonMode::Divides, 2, 6));
  CHECK_FALSE(mode_holds(ComparisonMode::Divides, 2, 3));
  CHECK(mode_holds(ComparisonMode::DividedBy, 6, 3));
  CHECK_FALSE(mode_holds(ComparisonMode::DividedBy, 3, 2));
  CHECK(mode_holds(ComparisonMode::Geq, 4, 4));
  CHECK_FALSE(mode_holds(ComparisonMode::Geq, 3, 4));
  CHECK(mode_holds(ComparisonMode::Leq, 3, 4));
  CHECK_FALSE(mode_holds(ComparisonMode::Leq, 4, 3));

  for (ComparisonMode mode : {ComparisonMode::Divides, ComparisonMode::DividedBy,
                              ComparisonMode::Geq, ComparisonMode::Leq}) {
    auto parsed = mode_from_name(mode_name(mode));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == mode);
  }
  CHECK_FALSE(mode_from_name("bogus").has_value());
}

TEST_CASE("the k=1 hexagon map produces the classical verification table") {
  VerificationReport report = verify_map(dihedral_paper_map(3, 1), ComparisonMode::Divides);
  REQUIRE(report.rows.size() == 6);
  CHECK(images_of(report) == std::vector<std::uint64_t>{0, 2, 4, 1, 3, 5});
  CHECK(domain_orders_of(report) == std::vector<std::uint64_t>{1, 3, 3, 2, 2, 2});
  CHECK(image_orders_of(report) == std::vector<std::uint64_t>{1, 3, 3, 6, 2, 6});
  CHECK(report.bijective);
  CHECK(report.verdict);
  CHECK_FALSE(report.failure.has_value());
}

TEST_CASE("the k=5 hexagon map produces the alternative verification table") {
  VerificationReport report = verify_map(dihedral_paper_map(3, 5), ComparisonMode::Divides);
  CHECK(images_of(report) == std::vector<std::uint64_t>{0, 2, 4, 5, 1, 3});
  CHECK(image_orders_of(report) == std::vector<std::uint64_t>{1, 3, 3, 6, 6, 2});
  CHECK(report.verdict);
}

TEST_CASE("dihedral map coefficients reduce modulo the group order") {
  CHECK(dihedral_paper_map(3, -1) == dihedral_paper_map(3, 5));
  CHECK(dihedral_paper_map(3, 7) == dihedral_paper_map(3, 1));
  CHECK(dihedral_paper_map(3, 1).coeff_a == 1);
  CHECK(dihedral_paper_map(3, 1).coeff_b == 2);
  CHECK(dihedral_paper_map(3, 1).modulus == 6);
}

TEST_CASE("dihedral maps require an odd k") {
  CHECK_THROWS_AS(dihedral_paper_map(3, 2), DomainError);
  CHECK_THROWS_AS(dihedral_paper_map(3, 0), DomainError);
  CHECK_THROWS_AS(dihedral_paper_map(3, -4), DomainError);
  CHECK_NOTHROW(dihedral_paper_map(1, 1));
}

TEST_CASE("odd k always yields an order-dividing bijection on dihedral groups") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t k = 1; k < 2 * n; k += 2) {
      VerificationReport report =
          verify_map(dihedral_paper_map(n, static_cast<std::int64_t>(k)), ComparisonMode::Divides);
      CHECK(report.verdict);
      CHECK(report.bijective);
    }
  }
}

TEST_CASE("rotations keep their exact order under the dihedral map") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t k = 1; k < 2 * n; k += 2) {
      VerificationReport report =
          verify_map(dihedral_paper_map(n, static_cast<std::int64_t>(k)), ComparisonMode::Divides);
      for (std::size_t i = 0; i < n; ++i) {  // rows 0..n-1 are the rotations
        CHECK(report.rows[i].domain_order == report.rows[i].image_order);
      }
    }
  }
}

TEST_CASE("product maps carry their construction parameters") {
  LinearMapSpec spec = product_paper_map(3, 2);
  CHECK(spec.domain == GroupSpec::product({3, 6}));
  CHECK(spec.codomain == GroupSpec::cyclic(18));
  CHECK(spec.coeff_a == 2);
  CHECK(spec.coeff_b == 3);
  CHECK(spec.modulus == 18);

  // The extra factor m multiplies the first coefficient.
  CHECK(product_paper_map(3, 2, 2).coeff_a == 4);
  CHECK(product_paper_map(3, 2, -1).coeff_a == 16);
}

TEST_CASE("product maps reject invalid parameters") {
  CHECK_THROWS_AS(product_paper_map(2, 3), DomainError);   // p must be odd
  CHECK_THROWS_AS(product_paper_map(9, 2), DomainError);   // p must be prime
  CHECK_THROWS_AS(product_paper_map(15, 2), DomainError);  // p must be prime
  CHECK_THROWS_AS(product_paper_map(3, 0), DomainError);   // k positive
  CHECK_THROWS_AS(product_paper_map(3, 6), DomainError);   // gcd(p, k) = 1
  CHECK_THROWS_AS(product_paper_map(3, 2, 3), DomainError);  // gcd(m, p) = 1
}

TEST_CASE("product maps verify across odd primes, k, and m") {
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
      if (std::gcd(p, k) != 1) continue;
      for (std::uint64_t m = 1; m <= 6; ++m) {
        if (std::gcd(m, p) != 1) continue;
        VerificationReport report =
            verify_map(product_paper_map(p, k, static_cast<std::int64_t>(m)),
                       ComparisonMode::Divides);
        CHECK(report.verdict);
        CHECK(report.bijective);
      }
    }
  }
}

TEST_CASE("product map orders follow the two construction cases") {
  // p = 3, k = 2: domain Z3 x Z6, codomain Z18.
  LinearMapSpec spec = product_paper_map(3, 2);
  VerificationReport report = verify_map(spec, ComparisonMode::Divides);
  for (const VerificationRow& row : report.rows) {
    std::uint64_t a = row.element.coords[0];
    std::uint64_t b = row.element.coords[1];
    if (a == 0) {
      // Images of (0, b) keep the exact order of b in Z_kp.
      CHECK(row.image_order == 6 / std::gcd<std::uint64_t>(6, b));
      CHECK(row.image_order == row.domain_order);
    } else {
      // Images of (a, b), a != 0, have order p^2 * k / gcd(b, k).
      CHECK(row.image_order == 18 / std::gcd<std::uint64_t>(2, b));
    }
    CHECK(row.image_order % row.domain_order == 0);
  }
}

TEST_CASE("eval_map reproduces single table entries") {
  LinearMapSpec table1 = dihedral_paper_map(3, 1);
  GroupSpec d6 = table1.domain;
  CHECK(eval_map(table1, make_element(d6, {0, 0})) == 0);
  CHECK(eval_map(table1, make_element(d6, {1, 2})) == 5);
  CHECK(eval_map(dihedral_paper_map(3, 5), make_element(d6, {1, 1})) == 1);
  CHECK_THROWS_AS(eval_map(table1, Element{{2, 0}}), DomainError);
  CHECK_THROWS_AS(eval_map(table1, Element{{0}}), DomainError);
}

TEST_CASE("linear maps require a two-coordinate domain") {
  CHECK_THROWS_AS(linear_map(GroupSpec::cyclic(6), 1, 2), DomainError);
  CHECK_THROWS_AS(linear_map(GroupSpec::product({2, 3, 4}), 1, 2), DomainError);
  CHECK_THROWS_AS(linear_map(GroupSpec::quaternion(2), 1, 1), DomainError);
  CHECK_NOTHROW(linear_map(GroupSpec::dihedral(5), 3, 2));
  CHECK_NOTHROW(linear_map(GroupSpec::product({3, 6}), 1, 1));
}

TEST_CASE("negative coefficients reduce into the codomain") {
  LinearMapSpec spec = linear_map(GroupSpec::dihedral(3), -1, -2);
  CHECK(spec.coeff_a == 5);
  CHECK(spec.coeff_b == 4);
}

TEST_CASE("a predicate failure on the same row as a collision reports the predicate") {
  // x = 2, y = 1 on the hexagon: row 3 (the reflection s) maps to 2, which
  // both collides with row 2 and breaks order divisibility.
  LinearMapSpec spec = linear_map(GroupSpec::dihedral(3), 2, 1);
  VerificationReport report = verify_map(spec, ComparisonMode::Divides);
  CHECK_FALSE(report.verdict);
  CHECK_FALSE(report.bijective);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->kind == FailureWitness::Kind::PredicateFailure);
  CHECK(report.failure->row == 3);
  CHECK(report.rows[3].image == 2);
  CHECK(report.rows[3].domain_order == 2);
  CHECK(report.rows[3].image_order == 3);
}

TEST_CASE("a bijective map can still fail the order predicate") {
  // x = 3, y = 1 on the hexagon is a bijection, but sr has order 2 while
  // its image 4 has order 3.
  VerificationReport report =
      verify_map(linear_map(GroupSpec::dihedral(3), 3, 1), ComparisonMode::Divides);
  CHECK(report.bijective);
  CHECK_FALSE(report.verdict);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->kind == FailureWitness::Kind::PredicateFailure);
  CHECK(report.failure->row == 4);
}

TEST_CASE("a pure collision reports the duplicated rows") {
  // y = 0 collapses all rotations onto 0; under geq the colliding row still
  // satisfies the predicate, so the duplicate is the only failure.
  VerificationReport report =
      verify_map(linear_map(GroupSpec::dihedral(3), 3, 0), ComparisonMode::Geq);
  CHECK_FALSE(report.bijective);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->kind == FailureWitness::Kind::DuplicateImage);
  CHECK(report.failure->row == 1);
  CHECK(report.failure->other_row == 0);
}

TEST_CASE("a collapsing map under divides reports the predicate first") {
  // y = 0 makes row 1 both collide with row 0 and fail divisibility; the
  // predicate takes precedence.
  VerificationReport report =
      verify_map(linear_map(GroupSpec::dihedral(3), 1, 0), ComparisonMode::Divides);
  CHECK_FALSE(report.bijective);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->kind == FailureWitness::Kind::PredicateFailure);
  CHECK(report.failure->row == 1);
}

TEST_CASE("another odd coefficient pair passes on the hexagon") {
  VerificationReport report =
      verify_map(linear_map(GroupSpec::dihedral(3), 1, 4), ComparisonMode::Divides);
  CHECK(report.verdict);
  CHECK(images_of(report) == std::vector<std::uint64_t>{0, 4, 2, 1, 5, 3});
}

TEST_CASE("each mode judges the k=1 hexagon map on its own terms") {
  LinearMapSpec spec = dihedral_paper_map(3, 1);
  CHECK(verify_map(spec, ComparisonMode::Divides).verdict);
  CHECK_FALSE(verify_map(spec, ComparisonMode::DividedBy).verdict);
  CHECK_FALSE(verify_map(spec, ComparisonMode::Geq).verdict);
  CHECK(verify_map(spec, ComparisonMode::Leq).verdict);

  VerificationReport divided_by = verify_map(spec, ComparisonMode::DividedBy);
  REQUIRE(divided_by.failure.has_value());
  CHECK(divided_by.failure->row == 3);  // s: image order 6 does not divide 2
}

TEST_CASE("verification rows mirror the canonical enumeration") {
  LinearMapSpec spec = dihedral_paper_map(5, 3);
  VerificationReport report = verify_map(spec, ComparisonMode::Divides);
  std::vector<Element> elems = enumerate_elements(spec.domain);
  REQUIRE(report.rows.size() == elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(report.rows[i].element == elems[i]);
    CHECK(report.rows[i].image == eval_map(spec, elems[i]));
    CHECK(report.rows[i].domain_order == test::order_by_iteration(spec.domain, elems[i]));
  }
}

TEST_CASE("verification respects the enumeration bound") {
  CHECK_THROWS_AS(verify_map(dihedral_paper_map(600'000, 1), ComparisonMode::Divides),
                  ResourceError);
  CHECK_THROWS_AS(verify_map(dihedral_paper_map(51, 1), ComparisonMode::Divides, 100),
                  ResourceError);
  CHECK_NOTHROW(verify_map(dihedral_paper_map(51, 1), ComparisonMode::Divides, 102));
}
