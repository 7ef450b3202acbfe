#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schedsim {

/// Base class for all schedsim errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A domain rule was violated: invalid workload, bad policy parameter,
/// malformed report input, incomplete trace.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure: open, read, write.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Malformed workload file. `line` is 1-based and counts physical lines.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace schedsim
