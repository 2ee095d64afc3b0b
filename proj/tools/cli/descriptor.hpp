#pragma once

#include <string>

#include <ordmap/group.hpp>

namespace ordmap::cli {

// Parses a group descriptor: Z<n> (cyclic), D<2n> (dihedral, by group
// order), Q<4m> (generalized quaternion, by group order), or a product of
// cyclic factors like Z3xZ6. Throws DomainError on anything else.
GroupSpec parse_group(const std::string& descriptor);

// Canonical descriptor for a spec; parse_group(group_name(g)) == g.
std::string group_name(const GroupSpec& g);

// Human-readable element name in the group's usual generator notation:
// cyclic "4", dihedral "sr^2", product "(1,4)", quaternion "x^3 y".
std::string element_name(const GroupSpec& g, const Element& e);

}  // namespace ordmap::cli
