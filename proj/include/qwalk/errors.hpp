#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Invalid parameter or configuration value.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A walk step would write outside the preallocated window.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floating-point state drifted past what upstream invariants allow.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cannot open, read, or write a file.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}

    int line_number;
};

}  // namespace qwalk
