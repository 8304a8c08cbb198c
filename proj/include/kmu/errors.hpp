#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally different rings (variables, weights or field differ).
struct RingMismatchError : Error {
    using Error::Error;
};

// Exact-arithmetic overflow past the desk-scale bounds (int64 coefficients,
// 16-bit exponents).
struct OverflowError : Error {
    using Error::Error;
};

// An operation that requires a (nonzero) weighted-homogeneous input got
// something else.
struct NotHomogeneousError : Error {
    using Error::Error;
};

// Bad domain data: non-positive weight, non-prime modulus, inconsistent
// degree profile, division by zero, ...
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// A resource budget was exhausted.  Deliberately distinct from any
// mathematical failure: the caller may retry with a larger budget.
struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what, long long steps_done = 0)
        : Error(what), steps(steps_done) {}
    long long steps;
};

}  // namespace kmu
