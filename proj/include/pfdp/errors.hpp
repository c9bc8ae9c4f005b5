#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfdp {

// Every failure the library raises derives from Error so callers (the CLI in
// particular) can separate domain failures from programming errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not meet its tolerance within the budget.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Moment statistics outside the region where an estimator is defined.
class InfeasibleStatsError : public Error {
public:
    using Error::Error;
};

/// A transition proportion sits at 0 or 1, so moment matching has no solution.
class DegenerateStatsError : public Error {
public:
    using Error::Error;
};

/// Sample variance is zero where a correlation was requested.
class DegenerateVarianceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pfdp
