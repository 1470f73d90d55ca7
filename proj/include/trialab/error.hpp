#pragma once

#include <stdexcept>
#include <string>

namespace trialab {

/// Input and precondition failures (bad selectors, dimension mismatches,
/// operator checks that must pass before a construction may run).
/// Mathematical findings are never errors; they travel in ViolationReport.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trialab
