#pragma once

#include <stdexcept>
#include <string>

namespace ngd {

/// Raised when a frequency response is requested exactly at a pole.
struct PoleEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the phase (and hence group delay) is undefined, e.g. at a
/// real-frequency zero of the response.
struct UndefinedPhaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an iterative numeric procedure (root finder, normalization
/// solver) fails to converge or produces non-finite results.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when circular-convolution wraparound contaminates a filtered
/// signal beyond tolerance even at the maximum padding.
struct WraparoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an unstable transfer function is applied without the
/// explicit override.
struct UnstableFilterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ngd
