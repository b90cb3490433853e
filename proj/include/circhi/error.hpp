#pragma once

#include <stdexcept>
#include <string>

namespace circhi {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or files.
struct ParseError : Error {
    using Error::Error;
};

// A domain precondition was violated (bad marking, cyclic orientation, ...).
struct DomainError : Error {
    using Error::Error;
};

struct GoodnessViolation : DomainError {
    using DomainError::DomainError;
};

struct NotAcyclic : DomainError {
    using DomainError::DomainError;
};

struct DomainMismatch : DomainError {
    using DomainError::DomainError;
};

struct InvalidColoring : DomainError {
    using DomainError::DomainError;
};

struct InadmissibleSchedule : DomainError {
    using DomainError::DomainError;
};

struct NotConnected : DomainError {
    using DomainError::DomainError;
};

// A dicycle with zero token count makes the cycle ratio unbounded.
struct RatioUnbounded : DomainError {
    using DomainError::DomainError;
};

// A positive-weight dicycle where none is allowed.
struct PositiveCycle : DomainError {
    using DomainError::DomainError;
};

// Per-vertex firing counts over one period disagree; would falsify the
// steady-state theory, so it is surfaced instead of ignored.
struct MultiplicityMismatch : DomainError {
    using DomainError::DomainError;
};

// Exact integer arithmetic left the 64-bit range.
struct OverflowError : DomainError {
    using DomainError::DomainError;
};

// An explicit resource cap (orientations, pulses, subsets, ...) was hit.
struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace circhi
