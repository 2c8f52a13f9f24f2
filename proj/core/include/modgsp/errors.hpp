#pragma once

#include <stdexcept>
#include <string>

namespace modgsp {

/// Base class for all modgsp errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameters, incompatible operator/basis choices, missing
/// configuration. Maps to CLI exit code 2.
class config_error : public error {
public:
    using error::error;
};

/// Malformed or inconsistent input data: files, signals that do not match
/// their graph, invalid partitions, empty passbands. CLI exit code 3.
class data_error : public error {
public:
    using error::error;
};

/// Numerical failure (eigensolver non-convergence and the like).
/// CLI exit code 4.
class numerical_error : public error {
public:
    using error::error;
};

} // namespace modgsp
