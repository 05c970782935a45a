#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cclab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested table or enumeration exceeds the configured size budget.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

/// The rejection sampler ran out of trials; carries the trial count.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& msg, std::int64_t trials)
        : Error(msg), trials_(trials) {}
    std::int64_t trials() const { return trials_; }

private:
    std::int64_t trials_;
};

/// A numeric routine cannot converge for the given arguments.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Malformed or out-of-domain input.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

} // namespace cclab
