#pragma once

#include <stdexcept>
#include <string>

namespace cvqkd {

// Raised when a configuration value or a precondition on user-supplied
// parameters is invalid. The CLI maps this to exit code 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal numerical consistency check fails (negative
// discriminants beyond tolerance, unphysical symplectic eigenvalues,
// vanishing likelihoods, non-finite outputs). The CLI maps this to exit 4.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cvqkd
