#ifndef DEPMARK_ERRORS_HPP
#define DEPMARK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace depmark {

// Base class for all errors raised by the library. The CLI maps subclasses
// onto process exit codes (validation -> 2, I/O -> 4).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Masses are negative or do not sum to one within tolerance.
struct MassError : Error {
    using Error::Error;
};

// Degenerate or overlapping geometry: piece with lower >= upper,
// duplicate atoms, unsupported component shape.
struct GeometryError : Error {
    using Error::Error;
};

// Inconsistent dimensions: mixed x-vector lengths, continuous marginal
// part with p > 1, conditional-law count mismatch.
struct DimensionError : Error {
    using Error::Error;
};

// Query point outside the support of the marginal.
struct SupportError : Error {
    using Error::Error;
};

// Probability argument outside [0, 1].
struct DomainError : Error {
    using Error::Error;
};

// Sample-size precondition violated (n = 0, n < 2, ...).
struct CountError : Error {
    using Error::Error;
};

// Operation applied in the wrong state (e.g. transforming twice).
struct StateError : Error {
    using Error::Error;
};

// Measure undefined for the input (Y a.s. constant, X a.s. constant).
struct DegenerateError : Error {
    using Error::Error;
};

// Requested catalog example does not exist.
struct UnknownExample : Error {
    using Error::Error;
};

// Filesystem or format failure while reading/writing datasets and models.
struct IoError : Error {
    using Error::Error;
};

} // namespace depmark

#endif // DEPMARK_ERRORS_HPP
