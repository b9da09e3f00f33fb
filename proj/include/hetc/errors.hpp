#pragma once

#include <stdexcept>
#include <string>

namespace hetc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state sits outside (or within the guard distance of) its constraint interval.
class OutOfBounds : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Division by a vanishing transform gain in the last backstepping step.
class DegenerateGain : public Error {
public:
    using Error::Error;
};

class NonMonotonicTime : public Error {
public:
    using Error::Error;
};

/// Configuration failed parsing or a lint check. `field()` names the offending key.
class ConfigInvalid : public Error {
public:
    ConfigInvalid(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace hetc
