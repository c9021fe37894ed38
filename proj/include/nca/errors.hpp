#pragma once

#include <stdexcept>
#include <string>

namespace nca {

/// Invalid input, configuration, or a rejected operation on well-formed state.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant of an algorithm, adversary, or data structure failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nca
