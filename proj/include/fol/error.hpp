#pragma once

#include <stdexcept>
#include <string>

namespace fol {

/// Violated mathematical precondition (non-integrable input, zero divisor, ...).
/// The CLI maps this to exit status 2.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched ambient dimensions or out-of-range indices.
class DimError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax or type error in the input DSL, with a source position.
class ParseError : public std::runtime_error {
public:
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

} // namespace fol
