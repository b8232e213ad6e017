#pragma once

#include <stdexcept>
#include <string>

namespace shapfx {

/// Thrown when a request exceeds a hard enumeration cap (2^d or d! blowup).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shapfx
