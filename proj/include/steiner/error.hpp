#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed or invalid input: bad edge lists, bad family parameters,
// out-of-range k, invalid terminal sets. CLI exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error(message) {}
};

// A documented capacity guard was exceeded (subset budgets, vertex-count
// caps). Never downgraded to an approximation. CLI exit code 3.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& message) : Error(message) {}
};

} // namespace steiner
