#include "ordmap/linear_map.hpp"

#include <numeric>
#include <string>

#include "ordmap/errors.hpp"
#include "ordmap/numtheory.hpp"

namespace ordmap {

namespace {

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t modulus) {
  __int128 r = static_cast<__int128>(value) % static_cast<__int128>(modulus);
  if (r < 0) r += modulus;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus);
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? 0ull - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

bool two_coordinate_domain(const GroupSpec& g) {
  return g.family() == Family::Dihedral ||
         (g.family() == Family::DirectProductCyclic && g.params().size() == 2);
}

void check_spec(const LinearMapSpec& spec) {
  if (!two_coordinate_domain(spec.domain)) {
    throw DomainError("linear maps need a dihedral or two-factor product domain");
  }
  if (spec.codomain.family() != Family::Cyclic) {
    throw DomainError("linear map codomain must be cyclic");
  }
  if (spec.codomain.order() != spec.domain.order() || spec.modulus != spec.codomain.order()) {
    throw DomainError("linear map domain, codomain and modulus must agree in order");
  }
}

}  // namespace

bool mode_holds(ComparisonMode mode, std::uint64_t domain_order, std::uint64_t image_order) {
  switch (mode) {
    case ComparisonMode::Divides:
      return image_order % domain_order == 0;
    case ComparisonMode::DividedBy:
      return domain_order % image_order == 0;
    case ComparisonMode::Geq:
      return domain_order >= image_order;
    case ComparisonMode::Leq:
      return domain_order <= image_order;
  }
  return false;
}

std::string mode_name(ComparisonMode mode) {
  switch (mode) {
    case ComparisonMode::Divides:
      return "divides";
    case ComparisonMode::DividedBy:
      return "divided-by";
    case ComparisonMode::Geq:
      return "geq";
    case ComparisonMode::Leq:
      return "leq";
  }
  return "unknown";
}

std::optional<ComparisonMode> mode_from_name(const std::string& name) {
  if (name == "divides") return ComparisonMode::Divides;
  if (name == "divided-by") return ComparisonMode::DividedBy;
  if (name == "geq") return ComparisonMode::Geq;
  if (name == "leq") return ComparisonMode::Leq;
  return std::nullopt;
}

LinearMapSpec dihedral_paper_map(std::uint64_t n, std::int64_t k) {
  if (n < 1) throw DomainError("n must be positive");
  if (abs_u64(k) % 2 == 0) throw DomainError("k must be an odd integer");
  GroupSpec domain = GroupSpec::dihedral(n);
  GroupSpec codomain = GroupSpec::cyclic(domain.order());
  std::uint64_t modulus = codomain.order();
  return LinearMapSpec{domain, codomain, reduce_mod(k, modulus), 2 % modulus, modulus};
}

LinearMapSpec product_paper_map(std::uint64_t p, std::uint64_t k, std::int64_t m) {
  if (!is_odd_prime(p)) throw DomainError("p must be an odd prime");
  if (k < 1) throw DomainError("k must be positive");
  if (std::gcd(p, k) != 1) throw DomainError("k must be coprime to p");
  if (std::gcd(abs_u64(m), p) != 1) throw DomainError("m must be coprime to p");
  auto kp = checked_mul(k, p);
  auto kp2 = kp ? checked_mul(*kp, p) : std::nullopt;
  if (!kp2) throw DomainError("k*p^2 overflows 64 bits");
  GroupSpec domain = GroupSpec::product({p, *kp});
  GroupSpec codomain = GroupSpec::cyclic(*kp2);
  std::uint64_t coeff_a = mul_mod(reduce_mod(m, *kp2), k % *kp2, *kp2);
  return LinearMapSpec{domain, codomain, coeff_a, p % *kp2, *kp2};
}

LinearMapSpec linear_map(const GroupSpec& domain, std::int64_t coeff_a, std::int64_t coeff_b) {
  if (!two_coordinate_domain(domain)) {
    throw DomainError("linear maps need a dihedral or two-factor product domain");
  }
  GroupSpec codomain = GroupSpec::cyclic(domain.order());
  std::uint64_t modulus = codomain.order();
  return LinearMapSpec{domain, codomain, reduce_mod(coeff_a, modulus),
                       reduce_mod(coeff_b, modulus), modulus};
}

std::uint64_t eval_map(const LinearMapSpec& spec, const Element& x) {
  check_spec(spec);
  // make_element re-validates coordinates against the domain.
  Element checked = make_element(spec.domain, x.coords);
  std::uint64_t image = mul_mod(spec.coeff_a, checked.coords[0], spec.modulus);
  image = (image + mul_mod(spec.coeff_b, checked.coords[1], spec.modulus)) % spec.modulus;
  return image;
}

VerificationReport verify_map(const LinearMapSpec& spec, ComparisonMode mode,
                              std::uint64_t bound) {
  check_spec(spec);
  VerificationReport report{spec, mode, true, {}, false, std::nullopt};
  report.rows.reserve(spec.domain.order());

  std::vector<std::size_t> first_row_with_image(spec.modulus, SIZE_MAX);
  bool all_hold = true;

  for_each_element(
      spec.domain,
      [&](const Element& e) {
        std::size_t row = report.rows.size();
        std::uint64_t image =
            (mul_mod(spec.coeff_a, e.coords[0], spec.modulus) +
             mul_mod(spec.coeff_b, e.coords[1], spec.modulus)) %
            spec.modulus;
        std::uint64_t domain_order = element_order(spec.domain, e);
        std::uint64_t image_order = spec.modulus / std::gcd(spec.modulus, image);
        bool holds = mode_holds(mode, domain_order, image_order);
        // The witness is the first failing row; when one row both fails the
        // predicate and collides, the predicate wins.
        if (!holds) {
          all_hold = false;
          if (!report.failure) {
            report.failure = FailureWitness{FailureWitness::Kind::PredicateFailure, row, row};
          }
        }
        if (first_row_with_image[image] != SIZE_MAX) {
          report.bijective = false;
          if (!report.failure) {
            report.failure = FailureWitness{FailureWitness::Kind::DuplicateImage, row,
                                            first_row_with_image[image]};
          }
        } else {
          first_row_with_image[image] = row;
        }
        report.rows.push_back(VerificationRow{e, domain_order, image, image_order, holds});
      },
      bound);

  report.verdict = report.bijective && all_hold;
  return report;
}

}  // namespace ordmap
