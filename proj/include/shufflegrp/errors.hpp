#pragma once

#include <stdexcept>

namespace shufflegrp {

/// A configured size limit (degree, pair-orbit, enumeration, token budget)
/// would be exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check on an intermediate result failed. Signals a
/// bug in a construction, never bad input.
class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shufflegrp
