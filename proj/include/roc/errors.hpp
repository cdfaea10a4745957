#pragma once

#include <stdexcept>
#include <string>

namespace roc {

// Invalid argument values (bad n, nonpositive rate, zero samples, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request outside what an operation supports (analytic n > 4, quadrature n > 5, ...).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric contract violated (distribution does not sum to 1, dimension mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data reaching a computation (NaN latencies, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace roc
