#pragma once

#include <stdexcept>
#include <string>

namespace hc {

// Base of every library error. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Input outside what this build can compute (q too large, unsupported family).
class Unsupported : public Error {
public:
    using Error::Error;
};

// An internal identity failed: non-integral trace, Weil bound violated.
// Always a bug, never a user error.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class CorruptFile : public IoError {
public:
    using IoError::IoError;
};

class VersionMismatch : public IoError {
public:
    using IoError::IoError;
};

class MissingData : public Error {
public:
    using Error::Error;
};

} // namespace hc
