#pragma once

#include <stdexcept>
#include <string>

namespace rieszlab {

// Each error kind maps onto one CLI exit code (see cli.hpp).
enum class ErrorKind { domain, range, precision, config, data };

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error
{
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

// Argument outside what the current tables can answer (e.g. x above the sieve limit).
class RangeError : public Error
{
public:
    explicit RangeError(const std::string& what) : Error(ErrorKind::range, what) {}
};

// A truncation or tail bound could not be brought under the requested tolerance.
class PrecisionError : public Error
{
public:
    explicit PrecisionError(const std::string& what) : Error(ErrorKind::precision, what) {}
};

class ConfigError : public Error
{
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

// Shipped or user-supplied data failed to load or validate.
class DataError : public Error
{
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

} // namespace rieszlab
