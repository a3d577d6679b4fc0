#pragma once

#include <stdexcept>

namespace qinv {

// A named mathematical hypothesis the input fails to satisfy (e.g. grading
// not surjective, scalar matrix inconsistent with the presentation).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computation routes that must agree did not; indicates a
// defect, never bad input.
struct InternalMismatchError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qinv
