#pragma once

#include <stdexcept>
#include <string>

namespace bigramsey {

/// Input that cannot be parsed or violates a documented format rule.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (retained shape count) was exceeded.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: a caller bug or an oracle mismatch.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bigramsey
