#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanocfg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (mismatched conductors,
/// wrong dimensions, inversion of zero, unsupported catalog name, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial or decomposition text. `position` is a 0-based
/// offset into the original input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An internal cross-check failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace fanocfg
