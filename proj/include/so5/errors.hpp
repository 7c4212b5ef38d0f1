#pragma once

#include <stdexcept>
#include <string>

namespace so5 {

// Base class for every failure raised by the numeric layers. The CLI maps
// these to exit code 2; verification failures use exit code 3 and are
// reported as data, not exceptions.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : ComputeError {
    using ComputeError::ComputeError;
};

struct RangeError : ComputeError {
    using ComputeError::ComputeError;
};

struct DomainError : ComputeError {
    using ComputeError::ComputeError;
};

struct OverflowError : ComputeError {
    using ComputeError::ComputeError;
};

struct ToleranceError : ComputeError {
    using ComputeError::ComputeError;
};

struct MethodError : ComputeError {
    using ComputeError::ComputeError;
};

struct IoError : ComputeError {
    using ComputeError::ComputeError;
};

}  // namespace so5
