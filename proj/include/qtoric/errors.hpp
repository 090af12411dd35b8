#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape/dimension mismatch between objects that must agree.
struct ShapeError : Error {
    using Error::Error;
};

// Operation called on the wrong coefficient ring.
struct RingError : Error {
    using Error::Error;
};

// A characteristic matrix failed (or requires) the vertex-basis condition.
struct ValidationError : Error {
    using Error::Error;
};

// A quotient presentation violates the unit-leading-coefficient contract.
struct DegeneracyError : Error {
    using Error::Error;
};

// Fundamental-class calibration disagrees across vertices.
struct CalibrationError : Error {
    using Error::Error;
};

// A configured enumeration/dimension cap was exceeded.
struct CapError : Error {
    using Error::Error;
};

// Malformed input (matrix files, partitions, parameter lists).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qtoric
