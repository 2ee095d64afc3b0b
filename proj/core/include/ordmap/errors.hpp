#pragma once

#include <stdexcept>
#include <string>

namespace ordmap {

// Bad arguments: incompatible element/group pairs, violated construction
// preconditions, malformed descriptors.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configurable bound (enumeration size, search range) was exceeded.
// The message names the offending value and the bound.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordmap
