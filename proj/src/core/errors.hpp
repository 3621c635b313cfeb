#pragma once

#include <stdexcept>

namespace qd {

/// Invalid argument, or exact arithmetic that would leave the 62-bit window.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A resource guard (brute-force cap, sieve memory guard) refused the request.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writing an output file failed.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qd
