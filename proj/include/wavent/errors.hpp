#pragma once

#include <stdexcept>
#include <string>

namespace wavent {

// Base class for all library errors. Subclasses carry the failure mode in the
// type so callers can dispatch without string matching.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BadField : Error {
  using Error::Error;
};
struct GridMismatch : Error {
  using Error::Error;
};
// An operation needed 1/mu but the p = 0 mode of the input is non-negligible
// at m = 0.
struct SingularMode : Error {
  using Error::Error;
};
struct DecayViolated : Error {
  using Error::Error;
};
struct MassNotZero : Error {
  using Error::Error;
};
struct RegionOutsideGrid : Error {
  using Error::Error;
};
struct NotLocalized : Error {
  using Error::Error;
};
struct SolveFailure : Error {
  using Error::Error;
};
struct TruncationNotConverged : Error {
  using Error::Error;
};
struct TraceMismatch : Error {
  using Error::Error;
};
struct ZeroDenominator : Error {
  using Error::Error;
};
struct EigSolveFailure : Error {
  using Error::Error;
};
struct ResampleUnderResolved : Error {
  using Error::Error;
};
struct NotSpacelikeRight : Error {
  using Error::Error;
};
struct ConfigInvalid : Error {
  using Error::Error;
};

}  // namespace wavent
