#include "hurwitz/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::int64_t isqrt(std::int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t ceil_sqrt(std::int64_t v) {
    if (v <= 0) return 0;
    const auto r = isqrt(v);
    return r * r == v ? r : r + 1;
}

// Nonempty norm shells of S in increasing order, counted through a per-chunk histogram.
class ShellStream {
public:
    struct Shell {
        std::int64_t norm;
        std::uint32_t count;
    };

    ShellStream(const DigitSet& s, std::int64_t start) : s_(s), next_lo_(std::max<std::int64_t>(start, 0)) {
        if (auto from = s.cofinite_from()) cofinite_from_ = *from;
    }

    std::optional<Shell> next() {
        for (;;) {
            while (pos_ < counts_.size()) {
                const auto i = pos_++;
                if (counts_[i]) return Shell{chunk_lo_ + static_cast<std::int64_t>(i), counts_[i]};
            }
            if (s_.is_finite() && next_lo_ > max_finite_norm()) return std::nullopt;
            fill();
        }
    }

private:
    std::int64_t max_finite_norm() const {
        const auto& m = s_.finite_members();
        return m.empty() ? -1 : m.back().norm_sq();
    }

    void fill() {
        const std::int64_t lo = next_lo_;
        const std::int64_t hi = lo + kChunk;
        counts_.assign(kChunk, 0);
        pos_ = 0;
        chunk_lo_ = lo;
        next_lo_ = hi;
        if (s_.is_finite()) {
            for (const auto& p : s_.finite_members()) {
                if (p.norm_sq() >= lo && p.norm_sq() < hi) ++counts_[p.norm_sq() - lo];
            }
            return;
        }
        for (std::int64_t x = 0; x * x < hi; ++x) {
            const std::int64_t x2 = x * x;
            const std::int64_t ylo = ceil_sqrt(lo - x2);
            const std::int64_t yhi = isqrt(hi - 1 - x2);
            for (std::int64_t y = ylo; y <= yhi; ++y) {
                const std::int64_t q = x2 + y * y;
                std::uint32_t c;
                if (cofinite_from_) {
                    if (q < *cofinite_from_) continue;
                    c = (x > 0 ? 2u : 1u) * (y > 0 ? 2u : 1u);
                } else {
                    c = 0;
                    const LatticePoint pts[4] = {{x, y}, {-x, y}, {x, -y}, {-x, -y}};
                    for (int k = 0; k < 4; ++k) {
                        if ((k == 1 || k == 3) && x == 0) continue;
                        if ((k == 2 || k == 3) && y == 0) continue;
                        if (s_.contains(pts[k])) ++c;
                    }
                }
                counts_[q - lo] += c;
            }
        }
    }

    static constexpr std::int64_t kChunk = std::int64_t{1} << 20;
    const DigitSet& s_;
    std::optional<std::int64_t> cofinite_from_;
    std::vector<std::uint32_t> counts_;
    std::size_t pos_ = 0;
    std::int64_t chunk_lo_ = 0;
    std::int64_t next_lo_ = 0;
};

// Anchors z_{m+1} produced in order, with the count and weighted sum of each annulus.
class AnchorStream {
public:
    struct Annulus {
        std::int64_t lo;
        std::int64_t hi;  // norm of the next anchor
        std::uint64_t count;
        double sum;
    };

    AnchorStream(const DigitSet& s, double h) : shells_(s, 0), h_(h) {
        auto first = shells_.next();
        if (!first) throw PreconditionError("digit set is empty");
        pending_ = *first;
    }

    std::int64_t first_norm() const { return pending_->norm; }
    std::uint32_t first_count() const { return pending_->count; }

    /// Next annulus starting at the current anchor; nullopt if S runs out first.
    std::optional<Annulus> next() {
        if (!pending_) return std::nullopt;
        Annulus a{pending_->norm, 0, 0, 0.0};
        auto cur = pending_;
        double sum = 0.0;
        for (;;) {
            if (!cur) {
                pending_.reset();
                return std::nullopt;
            }
            if (cur->norm > a.lo && sum >= 1.0) {
                a.hi = cur->norm;
                a.sum = sum;
                pending_ = cur;
                return a;
            }
            sum += cur->count * std::pow(static_cast<double>(cur->norm), -h_);
            a.count += cur->count;
            cur = shells_.next();
        }
    }

private:
    ShellStream shells_;
    double h_;
    std::optional<ShellStream::Shell> pending_;
};

// lexicographically first member of S with the given norm
LatticePoint first_member_with_norm(const DigitSet& s, std::int64_t norm) {
    const std::int64_t r = isqrt(norm);
    for (std::int64_t x = -r; x <= r; ++x) {
        const std::int64_t rest = norm - x * x;
        const std::int64_t y = isqrt(rest);
        if (y * y != rest) continue;
        if (s.contains({x, -y})) return {x, -y};
        if (s.contains({x, y})) return {x, y};
    }
    throw PreconditionError("no member of norm " + std::to_string(norm));
}

std::vector<double> lower_envelope(const GrowthFunction& f, std::int64_t horizon) {
    std::vector<double> g(static_cast<std::size_t>(horizon) + 2, std::numeric_limits<double>::infinity());
    for (std::int64_t n = horizon; n >= 1; --n) {
        g[n] = std::min(f(static_cast<double>(n)), g[n + 1]);
    }
    return g;
}

}  // namespace

std::int64_t NonAutSchedule::block_end(std::size_t m) const {
    if (m > blocks.size()) throw PreconditionError("block index beyond schedule");
    std::int64_t t = 0;
    for (std::size_t j = 0; j < m; ++j) t += blocks[j].t;
    return t;
}

std::size_t NonAutSchedule::block_of(std::int64_t n) const {
    if (n < 1) throw PreconditionError("step index must be positive");
    std::int64_t t = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        t += blocks[j].t;
        if (n <= t) return j + 1;
    }
    throw PreconditionError("step " + std::to_string(n) + " is beyond the schedule");
}

double ratio_profile(double ratio_tol, std::size_t m) { return ratio_tol / std::sqrt(static_cast<double>(m)); }

NonAutSchedule build_schedule(const DigitSet& s, const GrowthFunction& f, double eps, std::int64_t horizon,
                              double ratio_tol, std::optional<double> tau) {
    if (s.is_finite()) throw PreconditionError("schedule needs an infinite digit set");
    if (!tau) tau = s.known_tau();
    if (!tau) throw PreconditionError("no convergence exponent known for digit set '" + s.name() + "'");
    if (!(eps > 0 && eps < *tau)) throw PreconditionError("schedule needs 0 < eps < tau");
    if (horizon < 1) throw PreconditionError("horizon must be positive");
    if (!(ratio_tol > 0)) throw PreconditionError("ratio tolerance must be positive");

    const double min_modulus = std::sqrt(static_cast<double>(s.min_norm_sq()));
    for (std::int64_t n = 1; n <= horizon; ++n) {
        const double v = f(static_cast<double>(n));
        if (!(v >= min_modulus * (1 - 1e-12))) {
            std::ostringstream os;
            os << "growth function f(" << n << ") = " << v << " is below min|S| = " << min_modulus;
            throw PreconditionError(os.str());
        }
    }
    const auto g = lower_envelope(f, horizon);

    NonAutSchedule sched;
    sched.horizon = horizon;
    sched.eps = eps;
    sched.tau = *tau;
    sched.ratio_tol = ratio_tol;

    AnchorStream stream(s, (*tau - eps) / 2);
    const std::int64_t nz1 = stream.first_norm();
    const std::uint32_t s1_count = stream.first_count();
    std::vector<AnchorStream::Annulus> annuli;  // annuli[m-1] = [nz_m, nz_{m+1})
    auto ensure = [&](std::size_t count) {
        while (annuli.size() < count) {
            auto a = stream.next();
            if (!a) throw PreconditionError("digit set exhausted while choosing anchors");
            annuli.push_back(*a);
        }
    };
    auto count_of = [&](std::size_t m) -> std::uint64_t { return m == 1 ? s1_count : annuli[m - 1].count; };

    std::int64_t done = 0;  // T_{m-1}
    for (std::size_t m = 1;; ++m) {
        ensure(m + 1);  // anchors up to z_{m+2}
        const double next_bound = std::sqrt(static_cast<double>(annuli[m].hi));  // |z_{m+2}|
        const double lim_m = ratio_profile(ratio_tol, m);
        const double lim_next = ratio_profile(ratio_tol, m + 1);

        std::int64_t t = 1;
        const double log_m = std::log(static_cast<double>(count_of(m)));
        const double log_next = std::log(static_cast<double>(count_of(m + 1)));
        t = std::max<std::int64_t>(t, static_cast<std::int64_t>(std::ceil(log_m / lim_m)) - done);
        t = std::max<std::int64_t>(t, static_cast<std::int64_t>(std::ceil(log_next / lim_next)) - done - 1);
        while (done + t > 0 && log_m / static_cast<double>(done + t) > lim_m) ++t;
        while (log_next / static_cast<double>(done + t + 1) > lim_next) ++t;

        // f-domination for block m + 1 starts at step T_m + 1
        bool dominated = false;
        auto it = std::lower_bound(g.begin() + std::min<std::int64_t>(done + t + 1, horizon + 1),
                                   g.begin() + horizon + 1, next_bound);
        if (it != g.begin() + horizon + 1) {
            const std::int64_t first_ok = it - g.begin();
            t = std::max(t, first_ok - 1 - done);
            dominated = true;
        }

        ScheduleBlock b;
        b.norm_lo = m == 1 ? nz1 : annuli[m - 1].lo;
        b.norm_hi = m == 1 ? nz1 + 1 : annuli[m - 1].hi;
        b.count = count_of(m);
        b.annulus_sum = annuli[m - 1].sum;
        if (!dominated || done + t >= horizon) {
            b.partial = done + t > horizon || !dominated;
            b.t = horizon - done;
            sched.blocks.push_back(b);
            // running out of horizon while f still grows is the normal end; a flat
            // envelope over a final block of several steps means f stopped clearing the anchors
            if (!dominated && horizon > done + 1 && g[horizon] <= g[done + 1]) {
                sched.truncated = true;
                std::ostringstream os;
                os << "growth function never reaches |z_" << (m + 2) << "| = " << next_bound
                   << " within the horizon; block " << m << " runs to the horizon";
                sched.warnings.push_back(os.str());
            }
            break;
        }
        b.t = t;
        sched.blocks.push_back(b);
        done += t;
    }

    sched.anchors.push_back(first_member_with_norm(s, nz1));
    for (std::size_t m = 1; m <= sched.blocks.size(); ++m) {
        sched.anchors.push_back(first_member_with_norm(s, annuli[m - 1].hi));
    }
    return sched;
}

std::vector<ScheduleCheck> validate_schedule(const DigitSet& s, const GrowthFunction& f, const NonAutSchedule& sched) {
    std::vector<ScheduleCheck> out;
    auto fail = [](ScheduleCheck& c, const std::string& w) {
        if (c.passed) {
            c.passed = false;
            c.witness = w;
        }
    };
    const std::size_t blocks = sched.blocks.size();
    const double h = (sched.tau - sched.eps) / 2;

    ScheduleCheck shape{"shape", true, {}};
    if (blocks == 0) fail(shape, "no blocks");
    if (sched.anchors.size() != blocks + 1) fail(shape, "anchor count is not block count + 1");
    std::int64_t total = 0;
    for (const auto& b : sched.blocks) {
        if (b.t < 1) fail(shape, "nonpositive block length");
        total += b.t;
    }
    if (total != sched.horizon) fail(shape, "block lengths sum to " + std::to_string(total));
    out.push_back(shape);
    if (!shape.passed) return out;

    // first anchor: least norm in S, found by scanning lattice shells from 0
    ScheduleCheck first{"first_anchor", true, {}};
    {
        std::int64_t least = -1;
        for (std::int64_t lo = 0, hi = 64; least < 0 && lo < (std::int64_t{1} << 40); lo = hi + 1, hi *= 2) {
            for (const auto& p : lattice_points_in_norm_range(lo, hi)) {
                if (s.contains(p)) {
                    least = p.norm_sq();
                    break;
                }
            }
        }
        const auto& z1 = sched.anchors.front();
        if (!s.contains(z1)) fail(first, "z_1 not in S");
        if (z1.norm_sq() != least) fail(first, "|z_1|^2 = " + std::to_string(z1.norm_sq()) + ", min is " + std::to_string(least));
    }
    out.push_back(first);

    ScheduleCheck increasing{"anchors_increasing", true, {}};
    for (std::size_t m = 0; m + 1 < sched.anchors.size(); ++m) {
        if (!s.contains(sched.anchors[m + 1])) fail(increasing, "z_" + std::to_string(m + 2) + " not in S");
        if (sched.anchors[m + 1].norm_sq() <= sched.anchors[m].norm_sq()) {
            fail(increasing, "|z_" + std::to_string(m + 2) + "| <= |z_" + std::to_string(m + 1) + "|");
        }
    }
    out.push_back(increasing);
    if (!increasing.passed) return out;

    // annulus sums and block contents by direct point enumeration
    ScheduleCheck annulus{"annulus_sums", true, {}};
    ScheduleCheck members{"block_members", true, {}};
    for (std::size_t m = 1; m <= blocks; ++m) {
        const std::int64_t lo = sched.anchors[m - 1].norm_sq();
        const std::int64_t hi = sched.anchors[m].norm_sq();
        const std::int64_t r = isqrt(hi);
        double sum = 0.0;
        std::uint64_t in_annulus = 0, on_circle = 0;
        for (std::int64_t x = -r; x <= r; ++x) {
            const std::int64_t x2 = x * x;
            const std::int64_t ylo = ceil_sqrt(lo - x2);
            const std::int64_t yhi = isqrt(hi - 1 - x2);
            for (std::int64_t y = -yhi; y <= yhi; ++y) {
                if (y > -ylo && y < ylo) y = ylo;
                const std::int64_t q = x2 + y * y;
                if (q < lo || q >= hi || !s.contains({x, y})) continue;
                sum += std::pow(static_cast<double>(q), -h);
                ++in_annulus;
                if (q == lo) ++on_circle;
            }
        }
        if (sum < 1.0) fail(annulus, "block " + std::to_string(m) + " annulus sum " + std::to_string(sum) + " < 1");
        const auto& b = sched.blocks[m - 1];
        const bool first_block = m == 1;
        const std::int64_t want_lo = lo;
        const std::int64_t want_hi = first_block ? lo + 1 : hi;
        const std::uint64_t want_count = first_block ? on_circle : in_annulus;
        if (b.norm_lo != want_lo || b.norm_hi != want_hi || b.count != want_count) {
            std::ostringstream os;
            os << "block " << m << " is [" << b.norm_lo << ", " << b.norm_hi << ") with " << b.count
               << " members, expected [" << want_lo << ", " << want_hi << ") with " << want_count;
            fail(members, os.str());
        }
    }
    out.push_back(annulus);
    out.push_back(members);

    ScheduleCheck dom{"growth_domination", true, {}};
    std::int64_t start = 1;
    for (std::size_t m = 1; m <= blocks; ++m) {
        const std::int64_t end = start + sched.blocks[m - 1].t - 1;
        if (m >= 2) {
            const double bound = std::sqrt(static_cast<double>(sched.anchors[m].norm_sq()));
            for (std::int64_t n = start; n <= end; ++n) {
                const double v = f(static_cast<double>(n));
                if (v < bound * (1 - 1e-12)) {
                    std::ostringstream os;
                    os << "f(" << n << ") = " << v << " < |z_" << (m + 1) << "| = " << bound;
                    fail(dom, os.str());
                    break;
                }
            }
        }
        start = end + 1;
    }
    out.push_back(dom);

    ScheduleCheck ratios{"ratio_profile", true, {}};
    std::int64_t before = 0;
    for (std::size_t m = 1; m <= blocks; ++m) {
        const auto& b = sched.blocks[m - 1];
        const double lim = ratio_profile(sched.ratio_tol, m);
        const double lc = std::log(static_cast<double>(b.count));
        const double r1 = lc / static_cast<double>(before + b.t);
        const double r2 = lc / static_cast<double>(before + 1);
        // the second ratio of a block is fixed by the previous block's length
        if (r1 > lim * (1 + 1e-12) || (m >= 2 && r2 > lim * (1 + 1e-12))) {
            std::ostringstream os;
            os << "block " << m << " ratios " << r1 << ", " << r2 << " exceed " << lim;
            fail(ratios, os.str());
        }
        before += b.t;
    }
    out.push_back(ratios);
    return out;
}

LowerBoundChain verify_lower_bound_chain(const DigitSet& s, const NonAutSchedule& sched, double eps, double delta,
                                         std::int64_t n, double c1) {
    if (n < 1 || n > sched.horizon) throw PreconditionError("n must lie in [1, horizon]");
    if (!(delta > 0)) throw PreconditionError("delta must be positive");
    if (eps < sched.eps * (1 - 1e-12)) throw PreconditionError("eps is smaller than the schedule's eps");
    if (!(c1 > 0 && c1 < 1)) throw PreconditionError("C1 must lie in (0, 1)");

    LowerBoundChain out;
    out.delta = delta;
    out.s = (sched.tau - eps) / (2 + delta);
    const double radius = std::pow(c1, -1 / delta);
    for (std::size_t m = 1; m <= sched.blocks.size(); ++m) {
        if (std::sqrt(static_cast<double>(sched.anchors[m].norm_sq())) >= radius) {
            out.big_n = m;
            break;
        }
    }
    if (out.big_n == 0) throw PreconditionError("schedule never reaches |z| >= C1^{-1/delta}");
    out.t_big_n = sched.block_end(out.big_n);
    out.block_of_n = sched.block_of(n);

    // block factors for m = 2 .. block_of_n in one pass over the shells; blocks
    // from 2 on are consecutive annuli
    const double s2 = 2 * out.s;
    const double tail_exp = (2 + delta) * out.s;
    std::vector<double> head_sums(out.block_of_n + 1, 0.0), tail_sums(out.block_of_n + 1, 0.0);
    if (out.block_of_n >= 2) {
        ShellStream shells(s, sched.blocks[1].norm_lo);
        std::size_t m = 2;
        while (auto sh = shells.next()) {
            while (m <= out.block_of_n && sh->norm >= sched.blocks[m - 1].norm_hi) ++m;
            if (m > out.block_of_n) break;
            const double q = static_cast<double>(sh->norm);
            if (m <= out.big_n) head_sums[m] += sh->count * std::pow(q, -s2 / 2);
            else tail_sums[m] += sh->count * std::pow(q, -tail_exp / 2);
        }
    }

    // head: steps 1 .. min(n, T_N), each factor (C1 |i|^{-2})^s summed over the step alphabet
    const std::int64_t head_steps = std::min(n, out.t_big_n);
    double log_bound = static_cast<double>(head_steps) * out.s * std::log(c1);
    std::int64_t done = 0;
    for (std::size_t m = 1; m <= out.big_n && done < head_steps; ++m) {
        const auto& b = sched.blocks[m - 1];
        const std::int64_t len = std::min(b.t, head_steps - done);
        if (m == 1) {
            log_bound -= s2 * static_cast<double>(len) * 0.5 * std::log(static_cast<double>(b.norm_lo));
        } else {
            log_bound += static_cast<double>(len) * std::log(head_sums[m]);
        }
        done += len;
    }
    out.log_bound = log_bound;

    // tail: steps after T_N use |i|^{-(2+delta)s}; every block factor must be >= 1
    double post = 0.0;
    for (std::size_t m = out.big_n + 1; m <= out.block_of_n; ++m) {
        const auto& b = sched.blocks[m - 1];
        const std::int64_t start = sched.block_end(m - 1);
        const std::int64_t len = std::min(b.t, n - start);
        if (tail_sums[m] < 1.0) out.post_factors_ok = false;
        post += static_cast<double>(len) * std::log(tail_sums[m]);
    }
    out.post_log_product = post;
    out.n_independent = n >= out.t_big_n && out.post_factors_ok;
    out.positive = std::isfinite(out.log_bound) && out.post_factors_ok;
    return out;
}

SubexpReport subexp_check(const NonAutSchedule& sched) {
    SubexpReport out;
    std::int64_t n = 0;
    for (const auto& b : sched.blocks) {
        const double lc = std::log(static_cast<double>(b.count));
        for (std::int64_t k = 0; k < b.t; ++k) {
            ++n;
            out.trajectory.emplace_back(n, lc / static_cast<double>(n));
        }
    }
    const std::int64_t window = std::max<std::int64_t>(sched.horizon - sched.horizon / 10, 1);
    out.final_window_max = 0.0;
    for (const auto& [k, r] : out.trajectory) {
        if (k >= window) out.final_window_max = std::max(out.final_window_max, r);
    }
    out.passed = out.final_window_max < sched.ratio_tol;
    return out;
}

}  // namespace hurwitz
