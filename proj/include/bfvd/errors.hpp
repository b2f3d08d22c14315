#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace bfvd {

/// Malformed instance document. Carries the 1-based line number of the offense
/// (0 when the problem is not tied to a single line, e.g. a missing header).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The operation does not support the requested parameter combination
/// (e.g. the feedback-vertex solver with i = 1).
class UnsupportedParameter : public ContractError {
public:
    using ContractError::ContractError;
};

/// An internal self-check failed: a produced witness did not verify, or a
/// computed table does not have the required property.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses inputs above its size guard unless overridden.
class SizeGuardError : public ContractError {
public:
    using ContractError::ContractError;
};

class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock budget threaded through the search-tree solvers.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(std::chrono::milliseconds budget)
        : until_(std::chrono::steady_clock::now() + budget) {}

    bool expired() const {
        return until_ && std::chrono::steady_clock::now() >= *until_;
    }
    void check() const {
        if (expired()) throw TimeoutError("time limit exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> until_;
};

}  // namespace bfvd
