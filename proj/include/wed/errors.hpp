#pragma once

#include <stdexcept>
#include <string>

namespace wed {

// Malformed construction input: bad vertex ids, self loops, broken files.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be read or violates the expected text format.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation that requires a chordal graph was handed a non-chordal one.
struct not_chordal_error : std::runtime_error {
    explicit not_chordal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact search was asked to run beyond its size guard.
struct too_large_error : std::runtime_error {
    explicit too_large_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root vertex handed to the direct solver is not maximal in the
// closed-neighborhood order.
struct not_maximal_error : std::runtime_error {
    explicit not_maximal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Self-check failed: a solver produced something that violates its own
// postcondition.  Always a bug, never an input problem.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace wed
