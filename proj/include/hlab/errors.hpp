#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// A parameter outside the domain of an operation.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sink fired while the simulation window was empty. Pathwise identities
/// are not evaluated on such realizations.
class StarvedRealization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A trajectory does not cover the time needed for a query.
class HorizonInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input too large for an exhaustive oracle.
class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hlab
