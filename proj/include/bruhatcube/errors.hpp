#pragma once

#include <stdexcept>
#include <string>

namespace bruhatcube {

/// Malformed input: bad permutation text, degree mismatch, out-of-range letters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (x not below y, p not dwd, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested computation exceeds a size guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace bruhatcube
