#pragma once

#include <stdexcept>
#include <string>

namespace syncgame {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (game files, DIMACS, certificates, PVM dumps).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A construction or translation produced something that contradicts its own
/// invariants. Seeing one of these means there is a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace syncgame
