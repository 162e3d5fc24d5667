#pragma once
#include <stdexcept>
#include <string>

namespace curvecx {

// bad user input: unknown letters, malformed files, violated preconditions (exit 2)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// configured caps exceeded: slice too large, scan budget blown (exit 3)
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// internal consistency failure: an identity the code relies on did not hold (exit 1)
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curvecx
