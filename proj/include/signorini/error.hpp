#pragma once

#include <stdexcept>
#include <string>

namespace signorini {

/// Invalid grid, region, config or problem setup; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity that is undefined at the requested point or radius
/// (e.g. a derivative at the origin, a radius outside the quadrature range).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace signorini
