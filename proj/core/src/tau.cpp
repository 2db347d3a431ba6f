#include "hurwitz/tau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hurwitz/errors.hpp"

namespace hurwitz {

TauEstimate tau_exponent(const std::vector<double>& x, std::size_t trajectory_points) {
    const std::size_t h = x.size();
    if (h < 1000) throw PreconditionError("tau estimation needs a horizon of at least 1000");
    if (std::none_of(x.begin(), x.end(), [](double v) { return v > 1.0; })) {
        throw DomainError("all terms are <= 1 within the horizon; log x_n degenerates");
    }
    TauEstimate out;
    out.horizon = h;
    out.window_lo = std::max<std::size_t>(h / 10, 2);
    out.window_hi = h;

    // slope of log n against log x_n; only terms with x_n > 1 carry information
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    out.running_max = -std::numeric_limits<double>::infinity();
    for (std::size_t n = out.window_lo; n <= h; ++n) {
        const double xn = x[n - 1];
        if (!(xn > 1.0)) continue;
        const double lx = std::log(xn);
        const double ln = std::log(static_cast<double>(n));
        sx += lx;
        sy += ln;
        sxx += lx * lx;
        sxy += lx * ln;
        ++cnt;
        out.running_max = std::max(out.running_max, ln / lx);
    }
    if (cnt < 2) throw DomainError("too few terms above 1 in the tail window");
    const double c = static_cast<double>(cnt);
    const double var = sxx - sx * sx / c;
    if (!(var > 0)) throw DomainError("sequence is constant over the tail window");
    out.estimate = (sxy - sx * sy / c) / var;
    if (x[h - 1] > 1.0) out.window_last = std::log(static_cast<double>(h)) / std::log(x[h - 1]);

    std::size_t last = 0;
    const double span = std::log(static_cast<double>(h)) / std::log(2.0);
    for (std::size_t k = 0; k < trajectory_points; ++k) {
        const double t = trajectory_points > 1 ? static_cast<double>(k) / static_cast<double>(trajectory_points - 1) : 1;
        auto n = static_cast<std::size_t>(std::llround(std::exp2(1.0 + t * (span - 1.0))));
        n = std::clamp<std::size_t>(n, 2, h);
        if (n <= last) continue;
        last = n;
        const double xn = x[n - 1];
        if (!(xn > 1.0)) continue;
        out.trajectory.push_back({n, std::log(static_cast<double>(n)) / std::log(xn)});
    }
    return out;
}

std::vector<double> digit_set_moduli(const DigitSet& s, std::size_t horizon) {
    std::vector<double> out;
    out.reserve(horizon);
    if (auto from = s.cofinite_from()) {
        // bulk path: the lattice enumeration is already norm ordered
        const bool zero = *from == 0;
        auto pts = enumerate_lattice_by_norm(zero, horizon + static_cast<std::size_t>(4 * (*from) + 8));
        for (const auto& p : pts) {
            if (p.norm_sq() < *from) continue;
            out.push_back(std::sqrt(static_cast<double>(p.norm_sq())));
            if (out.size() == horizon) break;
        }
        return out;
    }
    for (const auto& p : s.first(horizon)) out.push_back(std::sqrt(static_cast<double>(p.norm_sq())));
    return out;
}

}  // namespace hurwitz
