#pragma once

#include <stdexcept>
#include <string>

namespace gi {

// Error hierarchy shared by the whole toolchain. The CLI maps these onto
// process exit codes: ParameterError/ShapeError -> 2, IoError -> 3,
// NumericalError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument value (bad density, non-positive epsilon, ...).
struct ParameterError : Error {
    using Error::Error;
};

// Dimension mismatch between rasters, stacks or vectors.
struct ShapeError : Error {
    using Error::Error;
};

// File system or file format failure.
struct IoError : Error {
    using Error::Error;
};

// Degenerate or undefined numerical situation (all-zero sensing matrix,
// zero background variance, ...).
struct NumericalError : Error {
    using Error::Error;
};

} // namespace gi
