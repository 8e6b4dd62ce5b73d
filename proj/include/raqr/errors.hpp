#pragma once

#include <stdexcept>
#include <string>

namespace raqr {

/// Bad physical/structural argument (lengths, domains, invariant violations).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Array length mismatch between coupled inputs.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid or inconsistent run configuration (bad keys, undersampling, empty bands).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear-system failure in the steady-state solver.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Identical post-chirp rates make the delay-Doppler system rank-deficient.
struct DegenerateChirpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All subcarriers of a frame were rejected as low-confidence.
struct FrameEstimationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace raqr
