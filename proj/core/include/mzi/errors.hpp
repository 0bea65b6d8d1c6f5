#pragma once

#include <stdexcept>

namespace mzi {

/// Invalid argument to a physics operation (negative temperature, negative
/// distance, zero decay rate where a finite attenuation length is required).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bloch vector longer than 1 beyond tolerance.
struct BlochNormError : DomainError {
    using DomainError::DomainError;
};

/// A constructed state or trajectory sample breaks a physical invariant
/// (trace, Hermiticity, positivity, finiteness) beyond tolerance.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nonpositive or oversized integrator step.
struct StepSizeError : DomainError {
    using DomainError::DomainError;
};

/// Decoherence-rate fit has too few usable samples or underflowed coherence.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Both path amplitudes vanish; predictability/visibility undefined.
struct DegenerateAmplitudes : DomainError {
    using DomainError::DomainError;
};

/// Invalid sweep specification or command-line/config input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mzi
