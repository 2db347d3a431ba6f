#include "hurwitz/threshold.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "hurwitz/errors.hpp"
#include "hurwitz/lattice_tail.hpp"

namespace hurwitz {

UpperConstants UpperConstants::from_k0(double k0) {
    UpperConstants c;
    c.k0 = k0;
    c.k1 = 2.0 * 0.5 / (3.0 * k0);
    c.k2 = k0 * std::numbers::sqrt2;
    return c;
}

ThresholdResult upper_threshold(const DigitSet& s, double eps, const UpperConstants& constants,
                                std::optional<double> tau) {
    if (!(eps > 0)) throw PreconditionError("upper threshold needs eps > 0");
    if (!tau) tau = s.known_tau();
    if (!tau) throw PreconditionError("no convergence exponent known for digit set '" + s.name() + "'");
    if (!(constants.k0 >= 1 && constants.k1 > 0 && constants.k2 > 0 && constants.c2 > 0)) {
        throw PreconditionError("upper threshold constants must be positive with K0 >= 1");
    }
    const double a = *tau + eps;
    if (!s.is_finite() && !(a > 2)) throw PreconditionError("tail series diverges: tau + eps <= 2");

    ThresholdResult out;
    out.exponent = a;
    out.factor = std::pow(constants.k0 * constants.k2 * constants.c2 / constants.k1, a / 2);
    out.search_start = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(s.min_norm_sq()))));

    std::map<std::int64_t, DigitTail> memo;
    auto tail = [&](std::int64_t n) -> const DigitTail& {
        auto it = memo.find(n);
        if (it == memo.end()) {
            it = memo.emplace(n, digit_tail_sum(s, n, a)).first;
            ++out.evaluations;
        }
        return it->second;
    };
    auto ok = [&](std::int64_t n) { return static_cast<long double>(out.factor) * tail(n).value <= 1.0L; };

    std::int64_t lo = out.search_start;  // fails
    std::int64_t hi;                     // holds
    if (ok(lo)) {
        hi = lo;
    } else {
        std::int64_t guess;
        if (s.is_finite()) {
            guess = static_cast<std::int64_t>(std::sqrt(static_cast<double>(s.finite_members().back().norm_sq()))) + 1;
        } else {
            // factor * 2 pi N^{2-a} / (a - 2) = 1
            guess = static_cast<std::int64_t>(std::ceil(std::pow(out.factor * 2 * std::numbers::pi / (a - 2), 1 / (a - 2))));
        }
        guess = std::max(guess, lo + 1);
        if (guess > (std::int64_t{1} << 31)) throw PreconditionError("threshold beyond supported cutoff range");
        if (ok(guess)) {
            hi = guess;
            std::int64_t step = 16;
            while (hi > lo + 1) {
                const std::int64_t probe = std::max(lo, hi - step);
                if (probe == lo) break;
                if (ok(probe)) {
                    hi = probe;
                    step *= 2;
                } else {
                    lo = probe;
                    break;
                }
            }
        } else {
            lo = guess;
            std::int64_t step = 16;
            for (;;) {
                const std::int64_t probe = lo + step;
                if (probe > (std::int64_t{1} << 31)) throw PreconditionError("threshold beyond supported cutoff range");
                if (ok(probe)) {
                    hi = probe;
                    break;
                }
                lo = probe;
                step *= 2;
            }
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (ok(mid)) hi = mid;
            else lo = mid;
        }
    }
    out.n = hi;
    out.tail_at_n = tail(hi).value;
    out.tail_exact = tail(hi).exact;
    if (hi > out.search_start) out.tail_before_n = tail(hi - 1).value;
    return out;
}

}  // namespace hurwitz
