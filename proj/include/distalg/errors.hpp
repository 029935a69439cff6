#pragma once

#include <stdexcept>
#include <string>

namespace distalg {

/// Base for every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by zero and friends.
struct arithmetic_error : error {
    using error::error;
};

/// Malformed raw distribution data (conflicting pieces, bad JSON, ...).
struct representation_error : error {
    using error::error;
};

/// A precondition of an operation was violated (e.g. intersecting
/// singular supports passed to the Hormander product).
struct precondition_error : error {
    using error::error;
};

/// Lex/parse failure. Positions are 1-based.
struct parse_error : error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& msg)
        : error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

/// Expression is type-incorrect (e.g. a power of a non-smooth operand).
struct type_error : error {
    using error::error;
};

/// The epsilon-limit oracle failed to converge.
struct oracle_error : error {
    using error::error;
};

} // namespace distalg
