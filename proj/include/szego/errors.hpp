#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// Malformed arguments: empty arrays, mismatched point dimensions,
/// unsupported domain/measure pairings.
class invalid_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point or parameter outside the set where a formula is defined
/// (punctures, pole loci, s outside (0,1), non-positive beta arguments).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical precondition that the caller can fix by changing a grid size.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Inconsistent configuration, e.g. a conformal map whose derivative winds
/// around the origin or vanishes on the closed disk.
class configuration_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace szego
