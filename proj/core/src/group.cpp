#include "ordmap/group.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ordmap/errors.hpp"
#include "ordmap/numtheory.hpp"

namespace ordmap {

namespace {

std::uint64_t group_order_of(Family family, const std::vector<std::uint64_t>& params) {
  for (std::uint64_t p : params) {
    if (p == 0) throw DomainError("group parameters must be positive");
  }
  switch (family) {
    case Family::Cyclic:
      if (params.size() != 1) throw DomainError("cyclic group takes one parameter");
      return params[0];
    case Family::Dihedral: {
      if (params.size() != 1) throw DomainError("dihedral group takes one parameter");
      auto order = checked_mul(2, params[0]);
      if (!order) throw DomainError("dihedral group order 2n overflows 64 bits");
      return *order;
    }
    case Family::DirectProductCyclic: {
      if (params.size() < 2) {
        throw DomainError("direct product takes at least two moduli");
      }
      std::uint64_t order = 1;
      for (std::uint64_t ni : params) {
        auto next = checked_mul(order, ni);
        if (!next) throw DomainError("direct product order overflows 64 bits");
        order = *next;
      }
      return order;
    }
    case Family::GeneralizedQuaternion: {
      if (params.size() != 1) throw DomainError("generalized quaternion group takes one parameter");
      if (params[0] < 2) throw DomainError("generalized quaternion requires m >= 2");
      auto order = checked_mul(4, params[0]);
      if (!order) throw DomainError("generalized quaternion order 4m overflows 64 bits");
      return *order;
    }
  }
  throw DomainError("unknown group family");
}

std::size_t arity_of(const GroupSpec& g) {
  switch (g.family()) {
    case Family::Cyclic:
      return 1;
    case Family::Dihedral:
    case Family::GeneralizedQuaternion:
      return 2;
    case Family::DirectProductCyclic:
      return g.params().size();
  }
  throw DomainError("unknown group family");
}

// Upper bound of every coordinate slot, in Element order.
std::uint64_t coord_limit(const GroupSpec& g, std::size_t slot) {
  switch (g.family()) {
    case Family::Cyclic:
      return g.params()[0];
    case Family::Dihedral:
      return slot == 0 ? 2 : g.params()[0];
    case Family::DirectProductCyclic:
      return g.params()[slot];
    case Family::GeneralizedQuaternion:
      return slot == 0 ? 2 * g.params()[0] : 2;
  }
  throw DomainError("unknown group family");
}

void check_compatible(const GroupSpec& g, const Element& x) {
  if (x.coords.size() != arity_of(g)) {
    throw DomainError("element has " + std::to_string(x.coords.size()) +
                      " coordinates, group expects " + std::to_string(arity_of(g)));
  }
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] >= coord_limit(g, i)) {
      throw DomainError("element coordinate " + std::to_string(i) + " = " +
                        std::to_string(x.coords[i]) + " out of range [0, " +
                        std::to_string(coord_limit(g, i)) + ")");
    }
  }
}

void check_enumeration_bound(const GroupSpec& g, std::uint64_t bound) {
  if (g.order() > bound) {
    throw ResourceError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration bound " + std::to_string(bound));
  }
}

Element element_at(const GroupSpec& g, std::uint64_t index) {
  Element e;
  switch (g.family()) {
    case Family::Cyclic:
      e.coords = {index};
      break;
    case Family::Dihedral: {
      std::uint64_t n = g.params()[0];
      e.coords = {index / n, index % n};
      break;
    }
    case Family::DirectProductCyclic: {
      const auto& moduli = g.params();
      e.coords.assign(moduli.size(), 0);
      for (std::size_t i = moduli.size(); i-- > 0;) {
        e.coords[i] = index % moduli[i];
        index /= moduli[i];
      }
      break;
    }
    case Family::GeneralizedQuaternion: {
      std::uint64_t two_m = 2 * g.params()[0];
      e.coords = {index % two_m, index / two_m};
      break;
    }
  }
  return e;
}

}  // namespace

GroupSpec::GroupSpec(Family family, std::vector<std::uint64_t> params)
    : family_(family), params_(std::move(params)), order_(group_order_of(family_, params_)) {}

GroupSpec GroupSpec::cyclic(std::uint64_t n) { return GroupSpec(Family::Cyclic, {n}); }

GroupSpec GroupSpec::dihedral(std::uint64_t n) { return GroupSpec(Family::Dihedral, {n}); }

GroupSpec GroupSpec::product(std::vector<std::uint64_t> moduli) {
  return GroupSpec(Family::DirectProductCyclic, std::move(moduli));
}

GroupSpec GroupSpec::quaternion(std::uint64_t m) {
  return GroupSpec(Family::GeneralizedQuaternion, {m});
}

Element make_element(const GroupSpec& g, std::vector<std::uint64_t> coords) {
  Element e{std::move(coords)};
  check_compatible(g, e);
  return e;
}

Element identity(const GroupSpec& g) {
  Element e;
  e.coords.assign(arity_of(g), 0);
  return e;
}

Element multiply(const GroupSpec& g, const Element& x, const Element& y) {
  check_compatible(g, x);
  check_compatible(g, y);
  Element out;
  switch (g.family()) {
    case Family::Cyclic: {
      std::uint64_t n = g.params()[0];
      out.coords = {(x.coords[0] + y.coords[0]) % n};
      break;
    }
    case Family::Dihedral: {
      // (s^a1 r^b1)(s^a2 r^b2) = s^(a1+a2) r^((-1)^a2 b1 + b2), from rs = sr^-1.
      std::uint64_t n = g.params()[0];
      std::uint64_t a1 = x.coords[0], b1 = x.coords[1];
      std::uint64_t a2 = y.coords[0], b2 = y.coords[1];
      std::uint64_t b1_conj = (a2 == 0) ? b1 : (n - b1) % n;
      out.coords = {(a1 + a2) % 2, (b1_conj + b2) % n};
      break;
    }
    case Family::DirectProductCyclic: {
      const auto& moduli = g.params();
      out.coords.resize(moduli.size());
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        out.coords[i] = (x.coords[i] + y.coords[i]) % moduli[i];
      }
      break;
    }
    case Family::GeneralizedQuaternion: {
      // (x^i1 y^j1)(x^i2 y^j2), using y x^i = x^-i y and y^2 = x^m.
      std::uint64_t two_m = 2 * g.params()[0];
      std::uint64_t m = g.params()[0];
      std::uint64_t i1 = x.coords[0], j1 = x.coords[1];
      std::uint64_t i2 = y.coords[0], j2 = y.coords[1];
      std::uint64_t i = (j1 == 0) ? (i1 + i2) % two_m : (i1 + two_m - i2) % two_m;
      std::uint64_t j = j1 + j2;
      if (j == 2) {
        i = (i + m) % two_m;
        j = 0;
      }
      out.coords = {i, j};
      break;
    }
  }
  return out;
}

namespace {

std::uint64_t order_by_iteration(const GroupSpec& g, const Element& x) {
  const Element id = identity(g);
  Element acc = x;
  std::uint64_t steps = 1;
  while (!(acc == id)) {
    if (steps > g.order()) {
      // Cannot happen for a well-formed element; by Lagrange the order
      // divides |G|.
      throw std::logic_error("element order iteration exceeded the group order");
    }
    acc = multiply(g, acc, x);
    ++steps;
  }
  return steps;
}

}  // namespace

std::uint64_t element_order(const GroupSpec& g, const Element& x) {
  check_compatible(g, x);
  switch (g.family()) {
    case Family::Cyclic: {
      std::uint64_t n = g.params()[0];
      return n / std::gcd(n, x.coords[0]);
    }
    case Family::Dihedral: {
      std::uint64_t n = g.params()[0];
      if (x.coords[0] == 1) return 2;  // reflections
      return n / std::gcd(n, x.coords[1]);
    }
    case Family::DirectProductCyclic: {
      const auto& moduli = g.params();
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        order = lcm_u64(order, moduli[i] / std::gcd(moduli[i], x.coords[i]));
      }
      return order;
    }
    case Family::GeneralizedQuaternion:
      return order_by_iteration(g, x);
  }
  throw DomainError("unknown group family");
}

void for_each_element(const GroupSpec& g, const std::function<void(const Element&)>& fn,
                      std::uint64_t bound) {
  check_enumeration_bound(g, bound);
  for (std::uint64_t index = 0; index < g.order(); ++index) {
    fn(element_at(g, index));
  }
}

std::vector<Element> enumerate_elements(const GroupSpec& g, std::uint64_t bound) {
  check_enumeration_bound(g, bound);
  std::vector<Element> out;
  out.reserve(g.order());
  for_each_element(g, [&](const Element& e) { out.push_back(e); }, bound);
  return out;
}

CyclicityResult is_cyclic(const GroupSpec& g) {
  CyclicityResult result;
  switch (g.family()) {
    case Family::Cyclic: {
      result.cyclic = true;
      result.generator = make_element(g, {g.params()[0] == 1 ? 0u : 1u});
      break;
    }
    case Family::Dihedral: {
      // Rotations top out at order n and reflections at 2, so only D_2 is
      // cyclic (s generates it).
      if (g.params()[0] == 1) {
        result.cyclic = true;
        result.generator = make_element(g, {1, 0});
      }
      break;
    }
    case Family::DirectProductCyclic: {
      const auto& moduli = g.params();
      bool coprime = true;
      for (std::size_t i = 0; i < moduli.size() && coprime; ++i) {
        for (std::size_t j = i + 1; j < moduli.size() && coprime; ++j) {
          coprime = std::gcd(moduli[i], moduli[j]) == 1;
        }
      }
      if (coprime) {
        result.cyclic = true;
        Element ones;
        ones.coords.assign(moduli.size(), 0);
        for (std::size_t i = 0; i < moduli.size(); ++i) {
          ones.coords[i] = moduli[i] == 1 ? 0 : 1;
        }
        result.generator = make_element(g, ones.coords);
      }
      break;
    }
    case Family::GeneralizedQuaternion:
      // Orders reach at most max(2m, 4) < 4m for m >= 2.
      break;
  }
  return result;
}

}  // namespace ordmap
