#pragma once

#include <stdexcept>

namespace rootbounds {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroLeadingCoefficient : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct AllRootsZero : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct NotHessenbergSparse : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct UnknownTheorem : Error { using Error::Error; };

}  // namespace rootbounds
