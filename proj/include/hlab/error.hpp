#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Malformed input: bad files, bad numerals, invalid polygons or norms.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed query outside the mathematical domain of an operation
/// (for example a radius below the set distance).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hlab
