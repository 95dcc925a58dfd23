#ifndef DIVPOW_ERRORS_HPP
#define DIVPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divpow {

/// Base class of all errors thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text or document.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("parse error: " + msg) {}
};

/// Structurally well-formed input that violates a mathematical contract
/// (non-multiplicative table, non-associative structure constants, ...).
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error("validation error: " + msg) {}
};

/// Operation requested over a base that the algorithms do not cover.
struct unsupported_base : error {
    explicit unsupported_base(const std::string& msg) : error("unsupported base: " + msg) {}
};

/// A quotient that was expected to be finite-dimensional is not.
struct infinite_dimensional : error {
    explicit infinite_dimensional(const std::string& msg)
        : error("infinite dimensional quotient: " + msg) {}
};

/// Deliberate refusal to start a computation that would explode.
struct size_limit_error : error {
    explicit size_limit_error(const std::string& msg) : error("size limit: " + msg) {}
};

} // namespace divpow

#endif
