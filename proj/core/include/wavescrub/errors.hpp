#pragma once

#include <stdexcept>
#include <string>

namespace wavescrub {

/// Base class for all wavescrub errors. The CLI maps subclasses to exit
/// codes: configuration/usage problems exit 2, runtime failures exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file header or payload (bad magic, unparseable tokens).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Header/payload size mismatch or incompatible frame geometries.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Non-finite or otherwise unusable values in otherwise well-formed data.
class DataError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (bad window, row out of range...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration text or an invalid spec object (empty pipeline,
/// violated CFL bound...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (unreadable/unwritable path).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace wavescrub
