#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fullrank {

/// Precondition or argument-shape violation.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search interval contained no admissible value (e.g. no prime).
class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction could not meet its entry bound.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its work budget. `required()` is the budget that
/// would have been needed, saturated at UINT64_MAX.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what + ": requires " + std::to_string(required) +
                             ", budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace fullrank
