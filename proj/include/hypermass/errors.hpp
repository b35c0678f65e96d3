#pragma once

#include <stdexcept>
#include <string>

namespace hypermass {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A radius or height lies outside the domain where a quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A height is not a regular value (|f'| below the regularity threshold).
class RegularityError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure (quadrature, limit ladder, ODE) failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A hypothesis of an inequality check does not hold for the given input.
class HypothesisError : public Error {
public:
    HypothesisError(const std::string& what, double where, double value)
        : Error(what), where_(where), value_(value) {}

    /// Location (radius or height) of the first violation.
    double where() const noexcept { return where_; }
    double value() const noexcept { return value_; }

private:
    double where_;
    double value_;
};

/// Invalid user configuration (CLI flags, config file, JSON documents).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace hypermass
