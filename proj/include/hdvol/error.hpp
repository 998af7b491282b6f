#pragma once

#include <stdexcept>
#include <string>

namespace hdvol {

/// Argument outside the mathematical domain of an operation (x <= 0 for ln_gamma, p <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input data: non-finite entries, dimension mismatch, empty samples.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The vectors handed to unit_normal do not span a hyperplane.
class DegenerateSubspaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Experiment configuration rejected during validation (CLI exit code 1).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be read or written (CLI exit code 2).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hdvol
