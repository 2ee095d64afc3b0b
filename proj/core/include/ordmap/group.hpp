#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ordmap {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

enum class Family {
  Cyclic,                 // Z_n, parameters [n]
  Dihedral,               // D_2n, parameters [n]
  DirectProductCyclic,    // Z_n1 x ... x Z_nt, parameters [n1,...,nt], t >= 2
  GeneralizedQuaternion,  // Q_4m, parameters [m], m >= 2
};

// One finite group from the supported catalog. Construction validates the
// parameters and rejects group orders that do not fit in 64 bits.
class GroupSpec {
 public:
  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);  // group order 2n
  static GroupSpec product(std::vector<std::uint64_t> moduli);
  static GroupSpec quaternion(std::uint64_t m);  // group order 4m

  Family family() const { return family_; }
  const std::vector<std::uint64_t>& params() const { return params_; }
  std::uint64_t order() const { return order_; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Family family, std::vector<std::uint64_t> params);

  Family family_;
  std::vector<std::uint64_t> params_;
  std::uint64_t order_;
};

// Normal form of a group element, interpreted against a GroupSpec:
//   Cyclic                [residue]
//   Dihedral              [a, b]  meaning s^a r^b, a in {0,1}, b in [0,n)
//   DirectProductCyclic   [r1,...,rt], ri in [0,ni)
//   GeneralizedQuaternion [i, j]  meaning x^i y^j, i in [0,2m), j in {0,1}
// Coordinates are always stored reduced, so equality of normal forms is
// equality of group elements.
struct Element {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

// Validates coords against g and returns the element. DomainError if the
// shape or a coordinate range does not match.
Element make_element(const GroupSpec& g, std::vector<std::uint64_t> coords);

Element identity(const GroupSpec& g);

// Product x*y in normal form. Dihedral: (a1,b1)(a2,b2) =
// (a1+a2 mod 2, (-1)^a2 b1 + b2 mod n). Quaternion: from x^2m = 1,
// y^2 = x^m, y x^i = x^-i y.
Element multiply(const GroupSpec& g, const Element& x, const Element& y);

// Smallest t >= 1 with x^t = identity. Closed forms for cyclic residues,
// dihedral elements and product tuples; generalized quaternions fall back
// to repeated multiplication capped at the group order.
std::uint64_t element_order(const GroupSpec& g, const Element& x);

// Visits every element exactly once in the canonical order: cyclic by
// residue; dihedral a then b ascending; product lexicographic with the
// first coordinate most significant; quaternion j then i ascending.
void for_each_element(const GroupSpec& g, const std::function<void(const Element&)>& fn,
                      std::uint64_t bound = kDefaultEnumerationBound);

std::vector<Element> enumerate_elements(const GroupSpec& g,
                                        std::uint64_t bound = kDefaultEnumerationBound);

struct CyclicityResult {
  bool cyclic = false;
  std::optional<Element> generator;  // witness of order |G| when cyclic
};

// Closed-form cyclicity test: cyclic groups trivially, dihedral only for
// n = 1, products iff the moduli are pairwise coprime (witness all-ones),
// generalized quaternions never.
CyclicityResult is_cyclic(const GroupSpec& g);

}  // namespace ordmap
