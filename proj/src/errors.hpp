#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abaf {

/// Malformed ICCMA input. Carries the 1-based line number (0 when the
/// problem is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Caller supplied an invalid argument (unknown atom, unsupported semantics, bad parameters).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard or enumeration cap was hit.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace abaf
