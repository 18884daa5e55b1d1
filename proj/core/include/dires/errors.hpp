#pragma once

#include <stdexcept>
#include <string>

namespace dires {

/// Edge-list or input syntax error, carries the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// The graph has no globally reachable node.
class NotConnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pivot fell below threshold during elimination.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(int pivot_index, const std::string& message)
        : std::runtime_error(message), pivot_index_(pivot_index) {}

    int pivot_index() const noexcept { return pivot_index_; }

private:
    int pivot_index_;
};

/// An iterative kernel failed to reach its tolerance or iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dires
