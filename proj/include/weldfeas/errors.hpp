#pragma once

#include <stdexcept>
#include <string>

namespace weldfeas {

// Geometry that cannot be processed (degenerate tangent, seam gap, ...).
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Asked for a solution out of an empty solution set.
struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation whose preconditions are not met by the data (e.g. speed
// criterion on a trajectory that fails for non-speed reasons).
struct NotApplicableError : std::runtime_error {
  explicit NotApplicableError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration content (schema violations, unknown ids). CLI exit 3.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / IO failures. CLI exit 2.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace weldfeas
