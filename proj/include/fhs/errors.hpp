#pragma once

#include <stdexcept>
#include <string>

namespace fhs {

// Base class for all solver errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two signals on incompatible grids were combined, or a CSV/config grid
// does not match the problem grid.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

// NaN/Inf in an input signal.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Fractional integral applied to a signal with a non-negligible mean
// (the multiplier is singular at w = 0).
class SingularModeError : public Error {
public:
    using Error::Error;
};

// Marchaud quadrature on a signal that does not decay at the grid boundary.
class DomainTruncationError : public Error {
public:
    using Error::Error;
};

// Which structural hypothesis on (alpha, L, W, f) was violated.
enum class HypothesisTag { Alpha, L, W1, W2, W3, Wf };

inline const char* to_string(HypothesisTag tag) {
    switch (tag) {
        case HypothesisTag::Alpha: return "alpha";
        case HypothesisTag::L:     return "L";
        case HypothesisTag::W1:    return "W1";
        case HypothesisTag::W2:    return "W2";
        case HypothesisTag::W3:    return "W3";
        case HypothesisTag::Wf:    return "Wf";
    }
    return "?";
}

class HypothesisError : public Error {
public:
    HypothesisError(HypothesisTag tag, const std::string& msg)
        : Error(std::string("[") + to_string(tag) + "] " + msg), tag_(tag) {}
    HypothesisTag tag() const { return tag_; }

private:
    HypothesisTag tag_;
};

// Config file / CLI argument problems.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fhs
