#include "hurwitz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hurwitz/conformal_ifs.hpp"
#include "hurwitz/digit_set.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/expansion.hpp"
#include "hurwitz/growth.hpp"
#include "hurwitz/pressure.hpp"
#include "hurwitz/schedule.hpp"
#include "json.hpp"

namespace hurwitz {

namespace {

using Suite = std::function<void(const RunConfig&, std::vector<CheckResult>&)>;

template <typename Body>
void check(std::vector<CheckResult>& out, const std::string& name, Body&& body) {
    CheckResult r{name, true, {}};
    try {
        std::string witness = body();
        if (!witness.empty()) {
            r.passed = false;
            r.witness = std::move(witness);
        }
    } catch (const std::exception& e) {
        r.passed = false;
        r.witness = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string str(const GaussianInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

void arith_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
    check(out, "count_in_square_closed_form", [] {
        for (std::uint64_t n = 0; n <= 50; ++n) {
            if (count_in_square(n) != (2 * n + 1) * (2 * n + 1)) return "N = " + std::to_string(n);
        }
        return std::string{};
    });
    check(out, "rounding_half_up", [] {
        const std::pair<mpq_class, long> cases[] = {{mpq_class(1, 2), 1}, {mpq_class(-1, 2), 0}, {mpq_class(3, 2), 2},
                                                    {mpq_class(-3, 2), -1}, {mpq_class(2, 5), 0}, {mpq_class(-7, 3), -2}};
        for (const auto& [x, want] : cases) {
            if (round_half_up(x) != want) return "round(" + x.get_str() + ")";
        }
        return std::string{};
    });
    check(out, "field_inverse", [&] {
        std::uint64_t state = cfg.seed;
        for (int i = 0; i < 200; ++i) {
            const auto z = random_unit_box_rational(state, 10'000);
            if (z.is_zero()) continue;
            if (!(z * z.reciprocal() == GaussianRational(GaussianInt(1, 0)))) return "z = " + z.to_string();
        }
        return std::string{};
    });
    check(out, "norm_order_enumeration", [] {
        const auto pts = enumerate_lattice_by_norm(true, 5000);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (!norm_order(pts[i - 1], pts[i])) return "position " + std::to_string(i);
        }
        return std::string{};
    });
}

void expansion_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
    check(out, "roundtrip_random_rationals", [&] {
        std::uint64_t state = cfg.seed;
        for (int i = 0; i < 300; ++i) {
            const auto z = random_unit_box_rational(state, 10'000);
            const auto res = expand(z, cfg.max_digits);
            if (!res.terminated) return "no termination for " + z.to_string();
            if (!(evaluate(res.digits) == z)) return "evaluate mismatch for " + z.to_string();
            for (const auto& d : res.digits) {
                if (classify_digit(d) == DigitClass::invalid) return "digit " + str(d) + " has norm < 2";
            }
        }
        return std::string{};
    });
    check(out, "known_expansion_2_5", [] {
        const auto res = expand(GaussianRational::from_fractions(2, 5, 0, 1));
        const DigitWord want{GaussianInt(3, 0), GaussianInt(-2, 0)};
        return res.digits == want && res.terminated ? std::string{} : format_digits(res.digits);
    });
    check(out, "half_open_box", [] {
        try {
            expand(GaussianRational::from_fractions(1, 2, 0, 1));
        } catch (const DomainError&) {
            return std::string{};
        }
        return std::string("re = 1/2 accepted");
    });
    check(out, "exceptional_set_size", [] {
        const auto ex = exceptional_digits();
        return ex.size() == 16 ? std::string{} : std::to_string(ex.size()) + " exceptional digits";
    });
    check(out, "cylinder_membership", [&] {
        std::uint64_t state = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < 100; ++i) {
            const auto z = random_unit_box_rational(state, 10'000);
            const auto res = expand(z, cfg.max_digits);
            DigitWord prefix;
            for (const auto& d : res.digits) {
                if (classify_digit(d) != DigitClass::regular) break;
                prefix.push_back(d);
            }
            if (!cylinder_check(prefix, z)) return "cylinder of " + z.to_string();
        }
        return std::string{};
    });
}

void ifs_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
    check(out, "contraction_sup_2_9", [] {
        const auto rep = contraction_bound(64);
        if (rep.sup != mpq_class(2, 9)) return "sup = " + rep.sup.get_str();
        return rep.below_two_thirds ? std::string{} : std::string("not below 2/3");
    });
    check(out, "decay_constants_on_grid", [] {
        const auto c = two_decaying_constants();
        const double c1 = c.c1.get_d(), c2 = c.c2.get_d();
        for (const auto& p : lattice_points_in_norm_range(8, 64)) {
            const auto w = BranchComposition::from_word({p.to_gaussian()});
            const double n = static_cast<double>(p.norm_sq());
            for (int a = 0; a <= 20; ++a) {
                for (int b = 0; b <= 20; ++b) {
                    const std::complex<double> z(-0.5 + a / 20.0, -0.5 + b / 20.0);
                    const double d = derivative_modulus(w, z);
                    if (d < c1 / n * (1 - 1e-12) || d > c2 / n * (1 + 1e-12)) return "branch " + str(p.to_gaussian());
                }
            }
        }
        return std::string{};
    });
    check(out, "single_branch_distortion_25_9", [] {
        mpq_class best = 0;
        for (const auto& p : lattice_points_in_norm_range(8, 64)) {
            best = std::max(best, word_distortion(BranchComposition::from_word({p.to_gaussian()})));
        }
        return best == mpq_class(25, 9) ? std::string{} : "max = " + best.get_str();
    });
    check(out, "open_set_separation", [&] {
        std::vector<MobiusBranch> branches;
        for (const auto& p : lattice_points_in_norm_range(8, 25)) branches.emplace_back(p.re, p.im);
        const auto rep = verify_separation(branches, 2000, cfg.seed);
        if (rep.ok) return std::string{};
        return str(rep.witness->branch) + " at " + rep.witness->point.to_string() + ": " + rep.witness->reason;
    });
}

void pressure_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
    const std::vector<GaussianInt> alpha{{2, 2}, {-2, -2}, {3, 0}, {0, 3}};
    check(out, "submultiplicativity", [&] {
        for (double s : {0.5, 1.0, 1.5}) {
            for (int m = 1; m <= 3; ++m) {
                for (int n = 1; m + n <= 5; ++n) {
                    const double zm = partition_sum(alpha, m, s, NormMode::sup_norm).log_z;
                    const double zn = partition_sum(alpha, n, s, NormMode::sup_norm).log_z;
                    const double zmn = partition_sum(alpha, m + n, s, NormMode::sup_norm).log_z;
                    if (zmn > zm + zn + 1e-12) {
                        std::ostringstream os;
                        os << "s=" << s << " m=" << m << " n=" << n;
                        return os.str();
                    }
                }
            }
        }
        return std::string{};
    });
    check(out, "single_branch_dimension_zero", [&] {
        BowenOptions opt;
        opt.tol = cfg.bisection_tol;
        const auto r = bowen_dimension({GaussianInt(2, 2)}, opt);
        return r.s_low == 0.0 && r.s_high <= cfg.bisection_tol ? std::string{} : "bracket does not pin 0";
    });
    check(out, "bowen_sign_invariants", [&] {
        BowenOptions opt;
        opt.tol = cfg.bisection_tol;
        opt.max_words = cfg.max_words;
        const auto r = bowen_dimension(alpha, opt);
        if (!(r.s_low <= r.s_high)) return std::string("s_low > s_high");
        if (r.at_low.upper_bracket < 0) return std::string("upper bracket negative at s_low");
        if (r.at_high.lower_bracket > 0) return std::string("lower bracket positive at s_high");
        if (r.s_high - r.s_low > cfg.bisection_tol) return std::string("bracket wider than tolerance");
        return r.midpoints_monotone ? std::string{} : std::string("bracket midpoints not monotone");
    });
}

void schedule_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
    const auto s = DigitSet::d2();
    const auto f = GrowthFunction::parse("n+3");
    const std::int64_t horizon = std::min<std::int64_t>(cfg.horizon, 2000);
    NonAutSchedule sched;
    check(out, "schedule_builds", [&] {
        sched = build_schedule(s, f, 0.5, horizon, cfg.ratio_tol);
        return sched.truncated ? std::string("schedule truncated") : std::string{};
    });
    if (sched.blocks.empty()) return;
    for (const auto& c : validate_schedule(s, f, sched)) {
        out.push_back({"schedule_" + c.name, c.passed, c.witness});
    }
    check(out, "subexponential_ratio", [&] {
        const auto r = subexp_check(sched);
        return r.passed ? std::string{} : "final window max " + std::to_string(r.final_window_max);
    });
}

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> all{{"arith", arith_suite},
                                                               {"expansion", expansion_suite},
                                                               {"ifs", ifs_suite},
                                                               {"pressure", pressure_suite},
                                                               {"schedule", schedule_suite}};
    return all;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json o;
        o["check"] = c.check;
        o["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) o["witness"] = c.witness;
        arr.push_back(o);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"arith", "expansion", "ifs", "pressure", "schedule", "all"};
    return names;
}

VerifyReport run_verify_suite(const std::string& suite, const RunConfig& config) {
    config.validate();
    VerifyReport rep;
    rep.suite = suite;
    bool found = false;
    for (const auto& [name, body] : suites()) {
        if (suite == "all" || suite == name) {
            body(config, rep.checks);
            found = true;
        }
    }
    if (!found) throw PreconditionError("unknown verify suite '" + suite + "'");
    return rep;
}

GaussianRational random_unit_box_rational(std::uint64_t& state, long max_denominator_norm) {
    std::mt19937_64 rng(state);
    const long r = static_cast<long>(std::sqrt(static_cast<double>(max_denominator_norm)));
    auto pick = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    GaussianInt den;
    do {
        den = GaussianInt(pick(-r, r), pick(-r, r));
    } while (den.is_zero() || den.norm_sq() > max_denominator_norm);
    const GaussianInt num(pick(-4 * r, 4 * r), pick(-4 * r, 4 * r));
    const GaussianRational q = GaussianRational(num) / GaussianRational(den);
    state = rng();
    return q - GaussianRational(nearest_round(q));
}

}  // namespace hurwitz
