#pragma once

#include <stdexcept>
#include <string>

namespace trias {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CompositionNotZero : std::logic_error {
    using std::logic_error::logic_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based line number (0 = unknown).
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

struct NotADeformation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotACocycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotASplitting : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trias
