#pragma once

#include <stdexcept>
#include <string>

namespace iwk {

// Error taxonomy. Every failure mode maps to one of these so the C API can
// return a stable status code and the CLI a stable exit code.

// Bad arguments or malformed input files.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical precondition violated by the caller (inverting a non-unit,
// querying an s-invariant at a regular index, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap was hit (matrix dimension, exact-numerator exponent,
// precision search bound). The message states the partial result when one
// exists.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working precision ran out before the requested certificate was reached.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal construction failed its own integrity checks (orientation
// calibration, divisibility of the averaged sums, adjacent-level agreement).
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Observed data contradicts a theorem the pipeline relies on (no unit
// coefficient below degree p, zero-uniqueness scan failed). Loud by design.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace iwk
