#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordmap/group.hpp"

namespace ordmap {

// Predicate P(o_domain, o_image) used when verifying a candidate bijection.
enum class ComparisonMode {
  Divides,    // o_domain | o_image
  DividedBy,  // o_image  | o_domain
  Geq,        // o_domain >= o_image
  Leq,        // o_domain <= o_image
};

bool mode_holds(ComparisonMode mode, std::uint64_t domain_order, std::uint64_t image_order);
std::string mode_name(ComparisonMode mode);
std::optional<ComparisonMode> mode_from_name(const std::string& name);

// A candidate linear map (a, b) -> coeff_a * a + coeff_b * b (mod modulus)
// from a two-coordinate domain into the cyclic group of equal order.
struct LinearMapSpec {
  GroupSpec domain;
  GroupSpec codomain;      // always Cyclic, |codomain| == |domain|
  std::uint64_t coeff_a;   // reduced mod modulus
  std::uint64_t coeff_b;   // reduced mod modulus
  std::uint64_t modulus;   // == |codomain|

  friend bool operator==(const LinearMapSpec&, const LinearMapSpec&) = default;
};

// D_2n -> Z_2n, s^a r^b -> k*a + 2*b (mod 2n). Requires odd k.
LinearMapSpec dihedral_paper_map(std::uint64_t n, std::int64_t k);

// Z_p x Z_kp -> Z_kp^2, (a, b) -> m*k*a + p*b (mod kp^2). Requires an odd
// prime p, gcd(p, k) = 1, gcd(m, p) = 1; m = 1 gives the plain k*a + p*b map.
LinearMapSpec product_paper_map(std::uint64_t p, std::uint64_t k, std::int64_t m = 1);

// Arbitrary coefficients over a dihedral or two-factor-product domain;
// the codomain is the cyclic group of the same order.
LinearMapSpec linear_map(const GroupSpec& domain, std::int64_t coeff_a, std::int64_t coeff_b);

// Image residue of x under the map. The domain must be dihedral or a
// two-factor product.
std::uint64_t eval_map(const LinearMapSpec& spec, const Element& x);

struct VerificationRow {
  Element element;
  std::uint64_t domain_order;
  std::uint64_t image;  // residue in the codomain
  std::uint64_t image_order;
  bool predicate_holds;
};

struct FailureWitness {
  enum class Kind { PredicateFailure, DuplicateImage };
  Kind kind;
  std::size_t row;        // failing row, or the later of a duplicated pair
  std::size_t other_row;  // for duplicates: the earlier row with the same image
};

// Element-by-element verification of a candidate map under one mode.
// rows has exactly |domain| entries in canonical enumeration order;
// verdict = bijective AND every row's predicate holds. failure records the
// first offending row (predicate failure or repeated image, whichever
// appears at the smaller row index; when both hit one row, the predicate).
struct VerificationReport {
  LinearMapSpec map;
  ComparisonMode mode;
  bool bijective = false;
  std::vector<VerificationRow> rows;
  bool verdict = false;
  std::optional<FailureWitness> failure;
};

VerificationReport verify_map(const LinearMapSpec& spec, ComparisonMode mode,
                              std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace ordmap
