#pragma once

#include <stdexcept>
#include <string>

namespace trieuler {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / representation errors.
struct MalformedInput : Error { using Error::Error; };
struct NonQuadrivalent : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct GraphMismatch : Error { using Error::Error; };

// Enumeration guards.
struct LimitExceeded : Error { using Error::Error; };

// Complex / triangulation errors.
struct NotAFraming : Error { using Error::Error; };
struct InconsistentComplex : Error { using Error::Error; };
struct DualizationFailure : Error { using Error::Error; };
struct NotAManifold : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };

// Numerics.
struct OutOfRange : Error { using Error::Error; };

// Filesystem.
struct IoFailure : Error { using Error::Error; };

} // namespace trieuler
