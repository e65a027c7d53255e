#pragma once

#include <stdexcept>
#include <string>

namespace hlirred {

// Input text could not be parsed; line/column are 1-based (0 = unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                            (column > 0 ? ":" + std::to_string(column) : "") +
                                            ": " + message
                                      : message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A configured resource limit (group order cap, orbit cap) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer arithmetic left the 64-bit range.
class ArithmeticOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hlirred
