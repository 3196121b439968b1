#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inverto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (out-of-range vertex,
/// order mismatch, parameter below its minimum).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation was refused because it exceeds a configured size cap.
class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, int cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

/// Structural precondition on a tournament failed (e.g. a criticality
/// query on a decomposable tournament).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace inverto
