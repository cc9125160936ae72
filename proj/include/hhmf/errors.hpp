#pragma once

#include <stdexcept>
#include <string>

namespace hhmf {

// Invalid input: inadmissible presets, malformed matrices, degenerate gradings.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation could not be completed with a correctness certificate
// (e.g. a sector whose restricted potential is not an isolated singularity).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hhmf
