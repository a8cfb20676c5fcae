#pragma once

#include <stdexcept>

namespace hyplab {

// Thrown when a requested limit exceeds a documented capacity cap. The CLI
// maps this to its own exit code so scripts can tell "too big" from "bad flag".
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyplab
