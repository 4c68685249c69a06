// Exception types shared across the library.
#pragma once

#include <stdexcept>

namespace tc {

// Base class for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested dimension exceeds a hard size/memory guard.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// The series fallback of the envelope did not converge; the degeneracy
// threshold is misconfigured for the requested time.
struct DegenerateLimitUnstable : Error {
    using Error::Error;
};

// The envelope does not decay (g = 0 or kappa = 0), so no steady state exists.
struct NoSteadyState : Error {
    using Error::Error;
};

// A coefficient vector cannot be realized by the rotation cascade.
struct InconsistentCoefficients : Error {
    using Error::Error;
};

// A non-finite value was passed where a finite one is required.
struct NaNInput : Error {
    using Error::Error;
};

// A qubit index does not address the given state.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// kappa = 0: the Lorentzian spectral density degenerates to a point mode.
struct ZeroLinewidth : Error {
    using Error::Error;
};

// A fixed-step integrator failed its self-consistency or trace check.
struct StepTooLarge : Error {
    using Error::Error;
};

// The requested backend cannot run with the given parameters.
struct BackendUnavailable : Error {
    using Error::Error;
};

}  // namespace tc
