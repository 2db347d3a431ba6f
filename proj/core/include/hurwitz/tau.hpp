#pragma once

// Convergence exponent tau = limsup log n / log x_n of a nondecreasing sequence.

#include <cstddef>
#include <vector>

#include "hurwitz/digit_set.hpp"

namespace hurwitz {

struct TauPoint {
    std::size_t n = 0;
    double ratio = 0.0;  // log n / log x_n
};

struct TauEstimate {
    double estimate = 0.0;        // least-squares slope of log n on log x_n over the window
    double running_max = 0.0;     // max of log n / log x_n over the window
    double window_last = 0.0;     // log H / log x_H
    std::size_t window_lo = 0;
    std::size_t window_hi = 0;
    std::size_t horizon = 0;
    std::vector<TauPoint> trajectory;  // log-spaced samples over [2, horizon]
};

/// x[k] is x_{k+1}; the horizon is x.size(). Requires horizon >= 1000.
TauEstimate tau_exponent(const std::vector<double>& x, std::size_t trajectory_points = 2000);

/// |i| for the first `horizon` members of S in norm order.
std::vector<double> digit_set_moduli(const DigitSet& s, std::size_t horizon);

}  // namespace hurwitz
