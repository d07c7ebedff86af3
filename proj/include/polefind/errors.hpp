// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_ERRORS_HPP
#define POLEFIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polefind {

/// Mismatched or otherwise unusable matrix/vector dimensions.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite entries, duplicate sample points, malformed parameters.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A linear solve hit an exactly singular factorization.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// A special function was evaluated at a singular point of its domain.
class SingularArgumentError : public std::domain_error {
public:
    explicit SingularArgumentError(const std::string& what) : std::domain_error(what) {}
};

/// File/stream parsing failure; carries a human-readable location.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polefind

#endif  // POLEFIND_ERRORS_HPP
