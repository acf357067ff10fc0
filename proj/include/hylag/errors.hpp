#pragma once

#include <stdexcept>

namespace hylag {

// Malformed input (bad tuple, dimension mismatch, ...). CLI exit code 1.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameter outside the operation's valid range. CLI exit code 1.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Request is structurally valid but too large to run. CLI exit code 2.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hylag
