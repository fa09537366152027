#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sround {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class range_error : public error {
public:
    using error::error;
};

class argument_error : public error {
public:
    using error::error;
};

class size_error : public error {
public:
    using error::error;
};

/// The input graph does not have the structure an operation requires
/// (e.g. an edge inside one side of a claimed bipartition).
class structure_error : public error {
public:
    using error::error;
};

/// A caller-side precondition between components was violated.
class contract_error : public error {
public:
    using error::error;
};

/// A postcondition check failed; indicates a bug rather than bad input.
class invariant_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace sround
