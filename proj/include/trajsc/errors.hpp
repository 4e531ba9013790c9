#pragma once

#include <stdexcept>
#include <string>

namespace trajsc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Trajectory collapses to a single point (zero arc length).
struct DegenerateTrajectory : Error {
  using Error::Error;
};

/// Correspondence set cannot constrain the requested transform
/// (rank-0 covariance, or collinear source for affine/anisotropic).
struct DegenerateCorrespondences : Error {
  using Error::Error;
};

/// Distance matrix fails symmetry/non-negativity checks.
struct InvalidMatrix : Error {
  using Error::Error;
};

/// Fewer than two samples given to family recovery.
struct TooFewSamples : Error {
  using Error::Error;
};

/// Prompt modifier cannot apply to the given base shape.
struct InapplicableModifier : Error {
  using Error::Error;
};

/// Rejection sampling hit its attempt cap.
struct SamplerExhausted : Error {
  using Error::Error;
};

/// File or JSON payload failed to parse.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace trajsc
