#pragma once

#include <stdexcept>
#include <string>

namespace kzq {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid physical or mathematical input (degenerate eigenproblem,
// non-positive data handed to a log fit, momenta outside the cutoff).
struct domain_error : error {
    using error::error;
};

// The adaptive integrator drove the step size below the representable
// minimum. `where` is the integration time at which it gave up.
struct stiffness_error : error {
    double where;
    stiffness_error(const std::string& msg, double t) : error(msg), where(t) {}
};

// A special-function evaluation could not reach the requested accuracy.
// `achieved` is the estimated relative error bound that was reached.
struct accuracy_error : error {
    double achieved;
    accuracy_error(const std::string& msg, double bound)
        : error(msg), achieved(bound) {}
};

// Malformed configuration file or command line.
struct config_error : error {
    using error::error;
};

// An analysis was asked for more than the data can support
// (too few points in a window, no plateau where one is required).
struct insufficient_data_error : error {
    using error::error;
};

}  // namespace kzq
