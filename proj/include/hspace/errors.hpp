// errors.hpp : exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace hspace {

// Arithmetic between scalars (or vectors) of different modes, or between
// objects belonging to different spaces.
class ModeMismatchError : public std::logic_error {
public:
    explicit ModeMismatchError(const std::string& what) : std::logic_error(what) {}
};

// Approx-mode linear algebra gave up: indefinite Gram beyond tolerance, or
// the two distance computations disagree beyond the residual tolerance.
class ConditioningError : public std::runtime_error {
public:
    explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// Bad run configuration (CLI / JSON).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hspace
