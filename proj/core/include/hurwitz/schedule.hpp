#pragma once

// Block schedules (z_m, S_m, t_m) for the non-autonomous system Psi built from
// a digit set S and a growth function f, with their validator and the
// lower-bound chain for Z_n^Psi.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/digit_set.hpp"
#include "hurwitz/growth.hpp"

namespace hurwitz {

struct ScheduleBlock {
    std::int64_t norm_lo = 0;  // S_m = {i in S : norm_lo <= |i|^2 < norm_hi}
    std::int64_t norm_hi = 0;
    std::uint64_t count = 0;
    std::int64_t t = 0;
    double annulus_sum = 0.0;  // sum of |i|^{-tau+eps} over norm_sq in [|z_m|^2, |z_{m+1}|^2)
    bool partial = false;      // cut at the horizon
};

struct NonAutSchedule {
    std::vector<LatticePoint> anchors;  // z_1 ... z_{M+1}
    std::vector<ScheduleBlock> blocks;  // S_1 ... S_M
    std::int64_t horizon = 0;
    double eps = 0.0;
    double tau = 0.0;
    double ratio_tol = 0.0;
    bool truncated = false;
    std::vector<std::string> warnings;

    /// T_m = t_1 + ... + t_m (m is 1-based; T_0 = 0).
    std::int64_t block_end(std::size_t m) const;
    /// 1-based index of the block containing step n.
    std::size_t block_of(std::int64_t n) const;
};

/// Tolerance for the log #S_m / T ratios of block m: ratio_tol / sqrt(m).
double ratio_profile(double ratio_tol, std::size_t m);

/// Greedy construction: each anchor has the least norm making its annulus sum
/// reach 1, each t_m is the least length meeting the f-domination condition for
/// block m + 1 and the ratio profile. Throws PreconditionError for finite S,
/// eps outside (0, tau), or f below min|S|.
NonAutSchedule build_schedule(const DigitSet& s, const GrowthFunction& f, double eps, std::int64_t horizon,
                              double ratio_tol, std::optional<double> tau = std::nullopt);

struct ScheduleCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

/// Recomputes every defining condition of the schedule from scratch by lattice enumeration.
std::vector<ScheduleCheck> validate_schedule(const DigitSet& s, const GrowthFunction& f, const NonAutSchedule& sched);

struct LowerBoundChain {
    double s = 0.0;            // (tau - eps) / (2 + delta)
    double delta = 0.0;
    std::size_t big_n = 0;     // least block with |z_{N+1}| >= C1^{-1/delta}
    std::int64_t t_big_n = 0;  // T_N
    double log_bound = 0.0;    // log of the explicit lower bound for Z_n^Psi(s)
    double post_log_product = 0.0;
    bool post_factors_ok = true;
    std::size_t block_of_n = 0;
    bool n_independent = false;
    bool positive = false;
};

/// eps must be at least the schedule's eps. Throws PreconditionError for n beyond the horizon.
LowerBoundChain verify_lower_bound_chain(const DigitSet& s, const NonAutSchedule& sched, double eps, double delta,
                                         std::int64_t n, double c1 = 16.0 / 25.0);

struct SubexpReport {
    std::vector<std::pair<std::int64_t, double>> trajectory;  // (n, log #I^(n) / n)
    double final_window_max = 0.0;
    bool passed = false;
};

/// #I^(n) is the size of the step-n alphabet S_m; the final window is the last tenth.
SubexpReport subexp_check(const NonAutSchedule& sched);

}  // namespace hurwitz
