// errors.hpp -- exception hierarchy shared by all qclock modules.
#pragma once

#include <stdexcept>

namespace qclock {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct InvalidDuration : Error { using Error::Error; };
struct InvalidGrid : Error { using Error::Error; };
struct BranchDomain : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct OverflowSaturation : Error { using Error::Error; };
struct InvalidThreshold : Error { using Error::Error; };
struct InvalidTime : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };

}  // namespace qclock
