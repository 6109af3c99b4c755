#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

// Input that violates a structural contract (mixed fields, bad file, ...).
struct malformed_input : std::runtime_error {
  explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

// Degree preconditions (e.g. differentiating by an operator of too-high degree).
struct degree_error : std::runtime_error {
  explicit degree_error(const std::string& what) : std::runtime_error(what) {}
};

// Presentation data that cannot define a valid quotient (dependent generators, ...).
struct presentation_error : std::runtime_error {
  explicit presentation_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation not available for the given backend or state (e.g. scans over the
// rational field, duality of a non-regular algebra).
struct unsupported_operation : std::runtime_error {
  explicit unsupported_operation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lefschetz
