#pragma once

#include <stdexcept>

namespace cotpi {

// Thrown when a computation would exceed an explicit budget (term caps,
// iteration caps, table sizes). The request was well formed; it is the
// resources that ran out.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a numeric process fails to behave as its contract requires
// (an iteration that stops contracting, an interval that collapses).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cotpi
