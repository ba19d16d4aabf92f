#pragma once

#include <stdexcept>
#include <string>

namespace pmtutte {

// Raised when a computation would exceed the configured basis-count or
// polynomial-term budget. Never a silent truncation.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a division that must be exact leaves a remainder.
struct DivisibilityError : std::logic_error {
    explicit DivisibilityError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

}  // namespace pmtutte
