#pragma once

#include <stdexcept>
#include <string>

namespace synodyne {

// Error taxonomy. ConfigError covers bad parameters, arguments, and input
// files (CLI exit code 1); NumericalError covers failures of the numerics
// themselves (CLI exit code 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

struct InvalidParameter : ConfigError {
    using ConfigError::ConfigError;
};

// Both or neither of {g, cooperativity} supplied to make_params.
struct AmbiguousCoupling : ConfigError {
    using ConfigError::ConfigError;
};

// Pump detuning != 0; all closed forms here assume a resonant pump.
struct UnsupportedDetuning : ConfigError {
    using ConfigError::ConfigError;
};

// Local oscillator with zero total power.
struct ZeroIntensity : ConfigError {
    using ConfigError::ConfigError;
};

// Detector carries no phase-quadrature component, so no force signal.
struct NoSignal : ConfigError {
    using ConfigError::ConfigError;
};

// g = 0: the meter never couples to the mechanics.
struct NoTransduction : ConfigError {
    using ConfigError::ConfigError;
};

struct InvalidArgument : ConfigError {
    using ConfigError::ConfigError;
};

// Integrator step fails the drift-eigenvalue stability margin.
struct StepTooLarge : ConfigError {
    using ConfigError::ConfigError;
};

struct IoError : ConfigError {
    using ConfigError::ConfigError;
};

struct OptimizationFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct NumericalFailure : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace synodyne
