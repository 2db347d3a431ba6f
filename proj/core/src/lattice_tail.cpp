#include "hurwitz/lattice_tail.hpp"

#include <cmath>
#include <numbers>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using ld = long double;

std::int64_t isqrt(std::int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// least y >= 0 with y^2 >= v
std::int64_t ceil_sqrt(std::int64_t v) {
    if (v <= 0) return 0;
    const auto r = isqrt(v);
    return r * r == v ? r : r + 1;
}

// sum over x >= n of x^{-p}, Euler-Maclaurin to the fifth derivative
ld zeta_tail(ld p, ld n) {
    const ld np = std::pow(n, -p);
    return n * np / (p - 1) + np / 2 + p * np / (12 * n) - p * (p + 1) * (p + 2) * np / (720 * n * n * n) +
           p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * np / (30240 * n * n * n * n * n);
}

// (1 + d)^{-h} for |d| small
double small_power(double d, double h) {
    if (std::fabs(d) > 1e-3) return std::pow(1 + d, -h);
    double term = 1, sum = 1;
    const int terms = std::fabs(d) < 1e-5 ? 3 : 6;
    for (int k = 1; k <= terms; ++k) {
        term *= -(h + k - 1) * d / k;
        sum += term;
    }
    return sum;
}

constexpr std::int64_t kDirectLimit = 1024;

ld tail_formula(std::int64_t n, ld a) {
    const ld nn = static_cast<ld>(n);
    // integral of (x^2 + y^2)^{-a/2} over y in R equals c |x|^{1-a}
    const ld c = std::sqrt(std::numbers::pi_v<ld>) * std::tgamma((a - 1) / 2) / std::tgamma(a / 2);
    const ld pi = std::numbers::pi_v<ld>;
    const ld n2a = std::pow(nn, 2 - a);
    ld total = 2 * pi * n2a / (a - 2) - 2 * c * n2a / (a - 2) - c * n2a / nn + 2 * c * zeta_tail(a - 1, nn);

    // inner rows |x| < n: Euler-Maclaurin derivative terms of the smooth part c x^{1-a} at x = +-n
    total += c * (1 - a) * std::pow(nn, -a) / 6;
    total -= c * (1 - a) * a * (a + 1) * std::pow(nn, -a - 2) / 360;

    // the row integral behaves like sum_k b_k u^{k+1/2} in u = n - |x|; each power
    // leaves a zeta(-k-1/2) endpoint term at x = +-n
    constexpr ld zeta_minus_half = -0.2078862249773545660L;
    constexpr ld zeta_minus_three_halves = -0.0254852018898330359L;
    const ld sqrt2 = std::numbers::sqrt2_v<ld>;
    total += -4 * sqrt2 * zeta_minus_half * std::pow(nn, 0.5L - a);
    total += -4 * sqrt2 * (2 * a / 3 - 0.25L) * zeta_minus_three_halves * std::pow(nn, -0.5L - a);

    // rows |x| < n: exact lattice sum outside the circle minus the integral
    // that the disk-complement area term assumed
    const std::int64_t n2 = n * n;
    const double base = std::pow(static_cast<double>(n), -static_cast<double>(a));
    const double h = static_cast<double>(a) / 2;
    const double ad = static_cast<double>(a);
    const double n2d = static_cast<double>(n2);
    ld corr_sum = 0;
    std::int64_t y0 = n;  // least y with x^2 + y^2 >= n^2, nonincreasing in x
    for (std::int64_t x = 0; x < n; ++x) {
        const std::int64_t x2 = x * x;
        while (y0 > 0 && (y0 - 1) * (y0 - 1) + x2 >= n2) --y0;
        const double yt = std::sqrt(static_cast<double>(n2 - x2));
        const std::int64_t r = y0 * y0 + x2 - n2;  // exact, in [0, 2 y0)
        const double gap = static_cast<double>(r) / (static_cast<double>(y0) + yt);
        const double g0 = base * small_power(static_cast<double>(r) / n2d, h);
        const double ym = (yt + static_cast<double>(y0)) / 2;
        const double gm = base * small_power(gap / 2 * (ym + yt) / n2d, h);
        const double dg0 = -ad * static_cast<double>(y0) * g0 / (n2d + static_cast<double>(r));
        const double corr = 2 * (-gap * gm + g0 / 2 - dg0 / 12);
        corr_sum += x > 0 ? 2 * corr : corr;
    }
    return total + corr_sum;
}

}  // namespace

long double lattice_annulus_sum(std::int64_t n, std::int64_t m, double a) {
    if (n < 0 || m < n) throw PreconditionError("annulus needs 0 <= N <= M");
    const std::int64_t lo2 = n * n, hi2 = m * m;
    const ld h = static_cast<ld>(a) / 2;
    ld sum = 0;
    for (std::int64_t x = -m; x <= m; ++x) {
        const std::int64_t x2 = x * x;
        const std::int64_t ymax = isqrt(hi2 - x2 - 1 < 0 ? -1 : hi2 - x2 - 1);
        if (x2 >= hi2) continue;
        const std::int64_t ymin = ceil_sqrt(lo2 - x2);
        // y in [-ymax, -ymin] and [ymin, ymax], y = 0 once
        for (std::int64_t y = ymin; y <= ymax; ++y) {
            const std::int64_t q = x2 + y * y;
            if (q == 0) continue;
            const ld v = std::pow(static_cast<double>(q), -static_cast<double>(h));
            sum += (y == 0) ? v : 2 * v;
        }
    }
    return sum;
}

long double lattice_tail_sum(std::int64_t n, double a) {
    if (!(a > 2)) throw PreconditionError("lattice tail diverges for exponent <= 2");
    if (n < 1) throw PreconditionError("lattice tail needs N >= 1");
    if (n > (std::int64_t{1} << 31)) throw PreconditionError("lattice tail cutoff too large");
    if (n < kDirectLimit) return lattice_annulus_sum(n, kDirectLimit, a) + tail_formula(kDirectLimit, a);
    return tail_formula(n, a);
}

TailBracket lattice_tail_bracket(std::int64_t n, double a, std::int64_t enumerate_to) {
    if (!(a > 2)) throw PreconditionError("lattice tail diverges for exponent <= 2");
    const std::int64_t r = std::max(n, enumerate_to);
    const ld direct = lattice_annulus_sum(n, r, a);
    // each point of norm >= r owns the unit cell centred on it; cells stay within sqrt2/2
    const ld c = std::numbers::sqrt2_v<ld> / 2;
    const ld pi = std::numbers::pi_v<ld>;
    const ld al = a;
    const ld rr = static_cast<ld>(r);
    const ld uhi = rr - 2 * c;
    const ld ulo = rr + 2 * c;
    TailBracket b;
    b.upper = direct + 2 * pi * (std::pow(uhi, 2 - al) / (al - 2) + c * std::pow(uhi, 1 - al) / (al - 1));
    b.lower = direct + 2 * pi * (std::pow(ulo, 2 - al) / (al - 2) - c * std::pow(ulo, 1 - al) / (al - 1));
    return b;
}

DigitTail digit_tail_sum(const DigitSet& s, std::int64_t n, double a) {
    if (n < 0) throw PreconditionError("negative cutoff");
    const ld h = static_cast<ld>(a) / 2;
    const std::int64_t n2 = n * n;
    DigitTail out;
    if (s.is_finite()) {
        for (const auto& p : s.finite_members()) {
            if (p.norm_sq() >= n2 && p.norm_sq() > 0) out.value += std::pow(static_cast<ld>(p.norm_sq()), -h);
        }
        return out;
    }
    if (auto from = s.cofinite_from()) {
        // lattice tail minus the points of norm < from that it counted
        const std::int64_t cut = std::max<std::int64_t>(n, 1);
        out.value = lattice_tail_sum(cut, a);
        for (const auto& p : lattice_points_in_norm_range(cut * cut, *from - 1)) {
            if (p.norm_sq() > 0) out.value -= std::pow(static_cast<ld>(p.norm_sq()), -h);
        }
        return out;
    }
    // general predicate: members up to radius r counted, the lattice bounds the rest
    const std::int64_t r = std::max<std::int64_t>(n, kDirectLimit);
    for (const auto& p : s.members_in_norm_range(n2, r * r - 1)) {
        if (p.norm_sq() > 0) out.value += std::pow(static_cast<ld>(p.norm_sq()), -h);
    }
    out.value += lattice_tail_sum(r, a);
    out.exact = false;
    return out;
}

}  // namespace hurwitz
