#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root datum construction.
struct NotCartan : Error { using Error::Error; };
struct NotFiniteType : Error { using Error::Error; };
struct GammaNotAutomorphism : Error { using Error::Error; };

// Weyl machinery.
struct IndexOutOfRange : Error { using Error::Error; };
struct OrbitTooLarge : Error { using Error::Error; };

// Parameters.
struct InvalidParam : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct EmptyViolationSet : Error { using Error::Error; };

// Graded orbits.
struct TooLarge : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct SupportMismatch : Error { using Error::Error; };

// GL_n enumeration.
struct BadGrid : Error { using Error::Error; };

// I/O and front end.
struct ParseError : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

}  // namespace fpp
