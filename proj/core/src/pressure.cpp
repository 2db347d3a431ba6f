#include "hurwitz/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <utility>

#include "hurwitz/conformal_ifs.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/expansion.hpp"
#include "hurwitz/mobius.hpp"

namespace hurwitz {

namespace {

std::vector<std::complex<double>> letters(const std::vector<GaussianInt>& alphabet) {
    if (alphabet.empty()) throw PreconditionError("empty alphabet");
    std::vector<std::complex<double>> out;
    for (const auto& d : alphabet) {
        if (classify_digit(d) != DigitClass::regular) {
            std::ostringstream os;
            os << "alphabet letter " << d << " is not in D2";
            throw PreconditionError(os.str());
        }
        out.emplace_back(d.re.get_d(), d.im.get_d());
    }
    return out;
}

double word_norm(const MobiusMatrixF& m, NormMode mode) {
    return mode == NormMode::sup_norm ? sup_derivative(m) : 1.0 / std::norm(m.d);
}

double checked_power(std::size_t base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= static_cast<double>(base);
    return p;
}

class KahanSum {
public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct PrunedWalk {
    const std::vector<std::complex<double>>& alpha;
    int n;
    double s;
    NormMode mode;
    std::size_t max_words;
    double z1;                       // sum over letters of ||D phi_i||^s
    std::vector<double> thresholds;  // per depth
    KahanSum kept;
    KahanSum dropped;
    KahanSum unvisited;
    std::size_t words = 0;
    bool aborted = false;

    void walk(const MobiusMatrixF& m, int depth) {
        const double prefix = depth == 0 ? 1.0 : std::pow(sup_derivative(m), s);
        const double bound = prefix * std::pow(z1, n - depth);
        if (aborted) {
            unvisited.add(bound);
            return;
        }
        if (depth == n) {
            if (words >= max_words) {
                aborted = true;
                unvisited.add(bound);
                return;
            }
            ++words;
            kept.add(std::pow(word_norm(m, mode), s));
            return;
        }
        if (depth > 0 && bound < thresholds[depth]) {
            dropped.add(bound);
            return;
        }
        for (const auto& a : alpha) walk(m.then_branch(a), depth + 1);
    }
};

void fill_brackets(PressureEstimate& e, double k0) {
    const double n = static_cast<double>(e.n);
    e.log_zn_over_n = e.log_z / n;
    const double spread = e.s * std::log(k0) / n;
    e.lower_bracket = e.log_zn_over_n - spread;
    const double upper_log = e.dropped_mass > 0 ? std::log(std::exp(e.log_z) + e.dropped_mass) : e.log_z;
    e.upper_bracket = upper_log / n;
    // base-point sums sit below the sup-norm sum by at most K0^s
    if (e.mode == NormMode::base_point) e.upper_bracket += spread;
}

}  // namespace

const char* to_string(NormMode m) { return m == NormMode::sup_norm ? "sup_norm" : "base_point"; }

std::vector<GaussianInt> ifs_alphabet(const DigitSet& set) {
    std::vector<GaussianInt> out;
    for (const auto& p : set.finite_members()) out.push_back(p.to_gaussian());
    letters(out);
    return out;
}

PressureEstimate partition_sum(const std::vector<GaussianInt>& alphabet, int n, double s, NormMode mode,
                               const PartitionOptions& options) {
    if (n < 1) throw PreconditionError("word length must be positive");
    if (!(s >= 0)) throw PreconditionError("s must be nonnegative");
    if (!(options.k0 >= 1)) throw PreconditionError("distortion constant must be >= 1");
    const auto alpha = letters(alphabet);
    const double total_words = checked_power(alpha.size(), n);

    PressureEstimate e;
    e.s = s;
    e.n = n;
    e.mode = mode;

    double z1 = 0.0;
    for (const auto& a : alpha) z1 += std::pow(sup_derivative(MobiusMatrixF::branch(a)), s);

    if (options.prune_tol <= 0 && total_words > static_cast<double>(options.max_words)) {
        throw BudgetExceeded("partition sum needs " + std::to_string(total_words) + " words, budget " +
                                 std::to_string(options.max_words),
                             0.0, std::pow(z1, n));
    }

    PrunedWalk w{alpha, n, s, mode, options.max_words, z1, {}, {}, {}, {}};
    w.thresholds.assign(n + 1, 0.0);
    if (options.prune_tol > 0) {
        const double total_bound = std::pow(z1, n);
        for (int d = 0; d <= n; ++d) {
            w.thresholds[d] = options.prune_tol * total_bound / checked_power(alpha.size(), d);
        }
    }
    w.walk(MobiusMatrixF{}, 0);
    if (w.aborted) {
        throw BudgetExceeded("partition sum exceeded the word budget of " + std::to_string(options.max_words),
                             w.kept.value(), w.dropped.value() + w.unvisited.value());
    }
    e.words = w.words;
    e.dropped_mass = w.dropped.value();
    e.pruned = e.dropped_mass > 0;
    const double z = w.kept.value();
    e.log_z = z > 0 ? std::log(z) : -std::numeric_limits<double>::infinity();
    fill_brackets(e, options.k0);
    return e;
}

WordSpectrum WordSpectrum::enumerate(const std::vector<GaussianInt>& alphabet, int n, NormMode mode,
                                     std::size_t max_words) {
    if (n < 0) throw PreconditionError("negative word length");
    const auto alpha = letters(alphabet);
    const double total = checked_power(alpha.size(), n);
    if (total > static_cast<double>(max_words)) {
        throw BudgetExceeded("word spectrum needs " + std::to_string(total) + " words", 0.0,
                             std::numeric_limits<double>::infinity());
    }
    WordSpectrum out;
    out.n_ = n;
    out.mode_ = mode;
    out.log_norms_.reserve(static_cast<std::size_t>(total));
    // iterative depth-first walk in lexicographic order
    std::vector<MobiusMatrixF> stack(n + 1);
    std::vector<std::size_t> index(n + 1, 0);
    if (n == 0) {
        out.log_norms_.push_back(0.0);
        return out;
    }
    int depth = 0;
    for (;;) {
        if (depth == n) {
            out.log_norms_.push_back(std::log(word_norm(stack[n], mode)));
            --depth;
            continue;
        }
        if (index[depth] == alpha.size()) {
            if (depth == 0) break;
            index[depth] = 0;
            --depth;
            continue;
        }
        stack[depth + 1] = stack[depth].then_branch(alpha[index[depth]++]);
        ++depth;
    }
    return out;
}

double WordSpectrum::log_z(double s) const {
    double peak = -std::numeric_limits<double>::infinity();
    for (double l : log_norms_) peak = std::max(peak, s * l);
    KahanSum sum;
    for (double l : log_norms_) sum.add(std::exp(s * l - peak));
    return peak + std::log(sum.value());
}

PressureEstimate WordSpectrum::estimate(double s, double k0) const {
    PressureEstimate e;
    e.s = s;
    e.n = n_;
    e.mode = mode_;
    e.words = log_norms_.size();
    e.log_z = log_z(s);
    fill_brackets(e, k0);
    return e;
}

BowenDimResult bowen_dimension(const std::vector<GaussianInt>& alphabet, const BowenOptions& options) {
    if (alphabet.empty()) throw PreconditionError("empty alphabet");
    if (!(options.tol > 0)) throw PreconditionError("bisection tolerance must be positive");
    if (options.n_max < 1) throw PreconditionError("n_max must be positive");
    letters(alphabet);

    int n_cap = 1;
    while (n_cap < options.n_max &&
           checked_power(alphabet.size(), n_cap + 1) <= static_cast<double>(options.max_words)) {
        ++n_cap;
    }
    if (checked_power(alphabet.size(), 1) > static_cast<double>(options.max_words)) {
        throw BudgetExceeded("alphabet larger than word budget", 0.0, std::numeric_limits<double>::infinity());
    }

    BowenDimResult res;
    WordSpectrum prev = WordSpectrum::enumerate(alphabet, 0, options.mode, options.max_words);
    for (int n = 1; n <= n_cap; ++n) {
        WordSpectrum cur = WordSpectrum::enumerate(alphabet, n, options.mode, options.max_words);
        std::vector<std::pair<double, double>> midpoints;

        auto estimate = [&](double s) {
            auto e = cur.estimate(s, options.k0);
            midpoints.emplace_back(s, 0.5 * (e.lower_bracket + e.upper_bracket));
            const double ratio = cur.log_z(s) - prev.log_z(s);
            return std::pair{e, std::clamp(ratio, e.lower_bracket, e.upper_bracket)};
        };

        BowenDimResult r;
        r.n_used = n;
        double a = 0.0, b = 2.0;
        auto [ea, va] = estimate(a);
        auto [eb, vb] = estimate(b);
        r.at_low = ea;
        r.at_high = eb;
        if (vb >= 0) {
            a = b;
            r.at_low = eb;
        }
        (void)va;
        while (b - a > options.tol && r.iterations < options.max_iterations) {
            const double m = 0.5 * (a + b);
            auto [em, vm] = estimate(m);
            ++r.iterations;
            if (em.lower_bracket > 0 || (em.upper_bracket >= 0 && vm >= 0)) {
                a = m;
                r.at_low = em;
            } else {
                b = m;
                r.at_high = em;
            }
        }
        r.s_low = a;
        r.s_high = b;
        r.low_certified = r.at_low.lower_bracket >= 0;
        r.high_certified = r.at_high.upper_bracket <= 0;
        r.conclusive = r.low_certified && r.high_certified;

        // outer ends of the two bracket curves, both nonincreasing in s: the last s
        // where the lower curve is >= 0 and the first s where the upper curve is <= 0
        auto last_nonnegative = [&](auto&& value) {
            double lo = 0.0, hi = 2.0;
            if (value(hi) >= 0) return hi;
            if (value(lo) < 0) return lo;
            while (hi - lo > options.tol * 1e-3) {
                const double m = 0.5 * (lo + hi);
                (value(m) >= 0 ? lo : hi) = m;
            }
            return lo;
        };
        auto first_nonpositive = [&](auto&& value) {
            double lo = 0.0, hi = 2.0;
            if (value(lo) <= 0) return lo;
            if (value(hi) > 0) return hi;
            while (hi - lo > options.tol * 1e-3) {
                const double m = 0.5 * (lo + hi);
                (value(m) <= 0 ? hi : lo) = m;
            }
            return hi;
        };
        r.certified_low = last_nonnegative([&](double s) { return cur.estimate(s, options.k0).lower_bracket; });
        r.certified_high = first_nonpositive([&](double s) { return cur.estimate(s, options.k0).upper_bracket; });

        std::sort(midpoints.begin(), midpoints.end());
        for (std::size_t i = 1; i < midpoints.size(); ++i) {
            if (midpoints[i].second > midpoints[i - 1].second + 1e-12) r.midpoints_monotone = false;
        }
        r.iterations += res.iterations;
        res = r;
        if (res.conclusive) break;
        prev = std::move(cur);
    }
    return res;
}

}  // namespace hurwitz
