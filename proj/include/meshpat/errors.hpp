#pragma once

#include <stdexcept>
#include <string>

namespace meshpat {

/// Malformed arguments: bad permutation words, out-of-range positions,
/// unparsable pattern tokens, infeasible block classes.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds the configured enumeration cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meshpat
