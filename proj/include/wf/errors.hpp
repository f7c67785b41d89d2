#pragma once

#include <stdexcept>
#include <string>

namespace wf {

// Base for everything thrown by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed config, mismatched truncation degrees, values
// outside documented domains.  CLI maps these to exit code 2.
struct validation_error : error {
    using error::error;
};

// A numeric procedure failed: non-invertible series, step-size underflow,
// domain escape, diverging fixed point.  CLI maps these to exit code 3.
struct numeric_error : error {
    using error::error;
};

struct degree_mismatch_error : validation_error {
    degree_mismatch_error() : validation_error("truncation degrees do not match") {}
};

struct non_invertible_error : numeric_error {
    using numeric_error::numeric_error;
};

struct not_elliptic_error : validation_error {
    not_elliptic_error() : validation_error("beta(0) = 0: linear part is not elliptic") {}
};

struct non_generic_error : validation_error {
    non_generic_error() : validation_error("alpha'(0) = 0: unfolding is not generic") {}
};

// Weak focus of order > 1: the resonant cubic coefficient has vanishing
// real part, outside the class this library handles.
struct order_error : numeric_error {
    using numeric_error::numeric_error;
};

struct preparation_error : validation_error {
    using validation_error::validation_error;
};

struct stiffness_error : numeric_error {
    using numeric_error::numeric_error;
};

// Trajectory left the certified chart domain; carries the path parameter.
struct domain_escape_error : numeric_error {
    double where;
    explicit domain_escape_error(double theta, const std::string& what)
        : numeric_error(what), where(theta) {}
};

struct non_return_error : numeric_error {
    using numeric_error::numeric_error;
};

struct divergence_error : numeric_error {
    using numeric_error::numeric_error;
};

struct config_error : validation_error {
    using validation_error::validation_error;
};

}  // namespace wf
