#pragma once

// Bundled invariant suites: arith, expansion, ifs, pressure, schedule, all.

#include <string>
#include <vector>

#include "hurwitz/gaussian.hpp"
#include "hurwitz/run_config.hpp"

namespace hurwitz {

struct CheckResult {
    std::string check;
    bool passed = true;
    std::string witness;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

const std::vector<std::string>& verify_suite_names();

/// Throws PreconditionError for an unknown suite.
VerifyReport run_verify_suite(const std::string& suite, const RunConfig& config);

/// Seeded point of U: a / b reduced by nearest rounding, with 1 <= |b|^2 <= max_denominator_norm.
GaussianRational random_unit_box_rational(std::uint64_t& state, long max_denominator_norm);

}  // namespace hurwitz
