#pragma once

#include <stdexcept>
#include <string>

namespace smearlab {

// Base of every error the library raises. Callers that only need to report a
// failure can catch this; the CLI maps it to a usage error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes do not fit the operation (matmul, kron of kets, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A parameter lies outside its domain: negative beta, nonpositive hbar,
// non-unit quaternion, malformed coefficient vector.
class DomainError : public Error {
public:
    using Error::Error;
};

// A state that must be normalized is not.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// The exact backend was asked for a square root that is not rational.
class NotRepresentableError : public Error {
public:
    using Error::Error;
};

// A numeric grid is too coarse for the widths it has to resolve.
class UnderResolvedGridError : public Error {
public:
    using Error::Error;
};

// A command-line or run configuration is invalid (bad flag value, a
// non-square δ for the exact backend, an unwritable path).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace smearlab
