#pragma once

// Least cutoff N with (K0 K2 C2 / K1)^{(tau+eps)/2} * sum_{i in S, |i| >= N} |i|^{-tau-eps} <= 1.

#include <cstdint>
#include <optional>

#include "hurwitz/digit_set.hpp"

namespace hurwitz {

struct UpperConstants {
    double k0 = 25.0 / 9.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double c2 = 16.0 / 9.0;

    /// K1 = 2 delta / (3 K0), K2 = K0 sqrt 2 with delta = 1/2.
    static UpperConstants from_k0(double k0);
};

struct ThresholdResult {
    std::int64_t n = 0;
    std::int64_t search_start = 0;
    double exponent = 0.0;  // tau + eps
    double factor = 0.0;
    long double tail_at_n = 0.0L;
    std::optional<long double> tail_before_n;  // at N - 1, absent when N is the search start
    bool tail_exact = true;
    int evaluations = 0;

    long double value_at_n() const { return static_cast<long double>(factor) * tail_at_n; }
};

/// tau defaults to S.known_tau(); a predicate set needs it passed explicitly.
ThresholdResult upper_threshold(const DigitSet& s, double eps, const UpperConstants& constants,
                                std::optional<double> tau = std::nullopt);

}  // namespace hurwitz
