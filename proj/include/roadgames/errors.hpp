#pragma once

#include <stdexcept>

namespace roadgames {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched dimensions between games, strategies or profiles.
struct ShapeError : Error {
    using Error::Error;
};

// Parameter outside its physical or mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// Malformed game file or config; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

// Input exceeds a documented solver limit.
struct CapacityError : Error {
    using Error::Error;
};

// Structurally invalid tree or strategy (missing choices, bad node refs).
struct StructureError : Error {
    using Error::Error;
};

// Well-formed data requesting a mode the library deliberately does not solve.
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace roadgames
