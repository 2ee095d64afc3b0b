#include "cli/descriptor.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include <ordmap/errors.hpp>

namespace ordmap::cli {

namespace {

[[noreturn]] void reject(const std::string& descriptor, const std::string& why) {
  throw DomainError("cannot parse group '" + descriptor + "': " + why +
                    " (expected Z<n>, D<2n>, Q<4m>, or a product like Z3xZ6)");
}

std::uint64_t parse_count(const std::string& descriptor, std::string_view digits) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
    reject(descriptor, "'" + std::string(digits) + "' is not a positive integer");
  }
  return value;
}

}  // namespace

GroupSpec parse_group(const std::string& descriptor) {
  // Split on 'x' between factors; single tokens may be Z, D, or Q, products
  // must be all-Z.
  std::vector<std::string_view> tokens;
  std::string_view rest = descriptor;
  while (true) {
    std::size_t cut = rest.find('x');
    if (cut == std::string_view::npos) {
      tokens.push_back(rest);
      break;
    }
    tokens.push_back(rest.substr(0, cut));
    rest = rest.substr(cut + 1);
  }

  for (std::string_view t : tokens) {
    if (t.size() < 2) reject(descriptor, "each factor needs a letter and a number");
  }

  if (tokens.size() == 1) {
    std::string_view t = tokens[0];
    std::uint64_t value = parse_count(descriptor, t.substr(1));
    switch (t[0]) {
      case 'Z':
        return GroupSpec::cyclic(value);
      case 'D':
        if (value % 2 != 0) reject(descriptor, "D takes the group order, which is even");
        return GroupSpec::dihedral(value / 2);
      case 'Q':
        if (value % 4 != 0 || value / 4 < 2) {
          reject(descriptor, "Q takes the group order, a multiple of 4 that is at least 8");
        }
        return GroupSpec::quaternion(value / 4);
      default:
        reject(descriptor, std::string("unknown family letter '") + t[0] + "'");
    }
  }

  std::vector<std::uint64_t> moduli;
  moduli.reserve(tokens.size());
  for (std::string_view t : tokens) {
    if (t[0] != 'Z') reject(descriptor, "only Z factors may appear in a product");
    moduli.push_back(parse_count(descriptor, t.substr(1)));
  }
  return GroupSpec::product(moduli);
}

std::string group_name(const GroupSpec& g) {
  switch (g.family()) {
    case Family::Cyclic:
      return "Z" + std::to_string(g.params()[0]);
    case Family::Dihedral:
      return "D" + std::to_string(2 * g.params()[0]);
    case Family::GeneralizedQuaternion:
      return "Q" + std::to_string(4 * g.params()[0]);
    case Family::DirectProductCyclic: {
      std::string name;
      for (std::uint64_t m : g.params()) {
        if (!name.empty()) name += "x";
        name += "Z" + std::to_string(m);
      }
      return name;
    }
  }
  throw DomainError("unknown group family");
}

namespace {

std::string power(const std::string& base, std::uint64_t exp) {
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

}  // namespace

std::string element_name(const GroupSpec& g, const Element& e) {
  Element checked = make_element(g, e.coords);
  const auto& c = checked.coords;
  switch (g.family()) {
    case Family::Cyclic:
      return std::to_string(c[0]);
    case Family::Dihedral: {
      if (c[0] == 0) return c[1] == 0 ? "1" : power("r", c[1]);
      return c[1] == 0 ? "s" : "s" + power("r", c[1]);
    }
    case Family::GeneralizedQuaternion: {
      std::string xpart = c[0] == 0 ? "" : power("x", c[0]);
      if (c[1] == 0) return xpart.empty() ? "1" : xpart;
      return xpart.empty() ? "y" : xpart + " y";
    }
    case Family::DirectProductCyclic: {
      std::string name = "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) name += ",";
        name += std::to_string(c[i]);
      }
      return name + ")";
    }
  }
  throw DomainError("unknown group family");
}

}  // namespace ordmap::cli
