#pragma once

#include <stdexcept>
#include <string>

namespace lqnet {

/// Malformed or inconsistent configuration / command-line input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs whose shapes disagree (effort vector vs. intention matrix vs. n_players).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures of the numerical solvers.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SpectralConditionViolated : public NumericError {
public:
    using NumericError::NumericError;
};

class ConcavityViolated : public NumericError {
public:
    using NumericError::NumericError;
};

class NonConvergence : public NumericError {
public:
    using NumericError::NumericError;
};

/// A statistic was requested over a window that contains no realized links.
class NoLinks : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force routines refuse instances that are too large to enumerate.
class EnumerationGuard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lqnet
