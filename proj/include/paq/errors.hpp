#pragma once

#include <stdexcept>
#include <string>

namespace paq {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

struct NotConnectedError : Error {
    using Error::Error;
};

struct NoSpanningTreeError : Error {
    using Error::Error;
};

struct PropertyFViolationError : Error {
    using Error::Error;
};

struct EdgeNotInY1Error : Error {
    using Error::Error;
};

}  // namespace paq
