#pragma once

#include <stdexcept>
#include <string>

namespace ordfield {

// Base for all errors raised by the library. Everything derives from
// std::runtime_error so callers can catch coarsely.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value is outside an operation's domain (division by zero, sqrt of a
// negative, standard part of an infinite element, ...).
struct DomainError : Error {
    using Error::Error;
};

// The stored data cannot decide the question: the answer lives at or above
// the truncation bound. Raised instead of guessing a sign.
struct TruncationError : DomainError {
    using DomainError::DomainError;
};

// Operands carry incompatible modes (Laurent vs Levi-Civita exponents,
// ordered-at-zero vs ordered-at-infinity rational functions).
struct ModeError : DomainError {
    using DomainError::DomainError;
};

// Text could not be parsed. offset is the byte position of the problem.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset_)
        : Error(what), offset(offset_) {}
    std::size_t offset;
};

}  // namespace ordfield
