#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Input outside the domain of an operation (z = 0, z not in U, pole hit, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input (complex literals, growth expressions, config files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the caller's arguments failed.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration budget exhausted. Carries what was summed so far and a bound on
/// the mass that was not visited.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double partial_sum, double truncation_bound)
        : std::runtime_error(what), partial_sum_(partial_sum), truncation_bound_(truncation_bound) {}

    double partial_sum() const noexcept { return partial_sum_; }
    double truncation_bound() const noexcept { return truncation_bound_; }

private:
    double partial_sum_;
    double truncation_bound_;
};

}  // namespace hurwitz
