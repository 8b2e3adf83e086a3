#pragma once

#include <stdexcept>
#include <string>

namespace symf {

// Raised when an exact division leaves a remainder. Structure-constant
// pipelines treat this as a violated divisibility invariant, not bad input.
struct NonzeroRemainder : std::runtime_error {
    explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the linear solver when the target lies outside the column span
// or the columns are not independent.
struct Inconsistent : std::runtime_error {
    explicit Inconsistent(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a solution coordinate that must be a polynomial in Z[t] is not.
struct NotPolynomial : std::runtime_error {
    explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the operator engine if a branch uses more applications than the
// potential bound allows. Must never fire; it guards the termination argument.
struct BudgetExceeded : std::logic_error {
    explicit BudgetExceeded(const std::string& what) : std::logic_error(what) {}
};

// Raised when straightening exceeds its rewrite-step budget.
struct FuelExhausted : std::runtime_error {
    explicit FuelExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symf
