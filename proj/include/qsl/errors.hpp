// Error hierarchy shared by the library and the CLI. The CLI maps the three
// branches to process exit codes: DomainError -> 2, IoError -> 3, everything
// under NumericError -> 4.

#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments or configuration.
struct DomainError : Error {
    using Error::Error;
};

struct NonHermitianInput : DomainError {
    using DomainError::DomainError;
};

struct UnknownPreset : DomainError {
    using DomainError::DomainError;
};

// Failures of the numerics themselves.
struct NumericError : Error {
    using Error::Error;
};

// Gamma = 0 (gamma = lambda = 0): the population coefficients divide by Gamma.
struct DegenerateModel : NumericError {
    using NumericError::NumericError;
};

struct PositivityViolation : NumericError {
    using NumericError::NumericError;
};

struct StepRejected : NumericError {
    using NumericError::NumericError;
};

struct QuadratureUnderflow : NumericError {
    using NumericError::NumericError;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qsl
