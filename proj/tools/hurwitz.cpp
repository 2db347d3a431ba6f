#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/conformal_ifs.hpp"
#include "hurwitz/digit_set.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/expansion.hpp"
#include "hurwitz/growth.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/pressure.hpp"
#include "hurwitz/run_config.hpp"
#include "hurwitz/schedule.hpp"
#include "hurwitz/tau.hpp"
#include "hurwitz/tessellation.hpp"
#include "hurwitz/threshold.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "json";
};

void emit(const Globals& g, const std::string& text) {
    if (g.out_path.empty() || g.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + g.out_path + "'");
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig load_config(const Globals& g) {
    RunConfig cfg = g.config_path.empty() ? RunConfig{} : RunConfig::load(g.config_path);
    if (g.seed) cfg.seed = *g.seed;
    cfg.validate();
    return cfg;
}

// "D2", "list:2,2;-2,-2", ... or @file.json holding [[k, l], ...]
DigitSet load_digit_set(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        const auto word = digits_from_json(read_file(spec.substr(1)));
        std::vector<LatticePoint> pts;
        for (const auto& d : word) pts.push_back({d.re_i64(), d.im_i64()});
        if (pts.empty()) throw ParseError("alphabet file is empty");
        return DigitSet::finite(std::move(pts), spec.substr(1));
    }
    return DigitSet::parse(spec);
}

std::string decimal(const mpq_class& q, int bits) {
    mpf_class f(q, static_cast<mp_bitcnt_t>(bits));
    mp_exp_t exp = 0;
    const int digits = std::max(1, static_cast<int>(bits * 0.30103));
    std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (m.empty()) return "0";
    const bool neg = m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + m;
    } else if (static_cast<std::size_t>(exp) >= m.size()) {
        out = m + std::string(static_cast<std::size_t>(exp) - m.size(), '0');
    } else {
        out = m.substr(0, static_cast<std::size_t>(exp)) + "." + m.substr(static_cast<std::size_t>(exp));
    }
    return neg ? "-" + out : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz complex continued fractions: expansions, cylinders and dimension estimates"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "key = value run configuration");
    app.add_option("--seed", g.seed, "seed for every sampled computation");
    app.add_option("--out", g.out_path, "write the primary output here instead of stdout");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "Hurwitz digits of an exact point of U");
    std::string z_text;
    std::optional<std::size_t> max_digits;
    expand_cmd->add_option("z", z_text, "point as \"p/q+r/s i\"")->required();
    expand_cmd->add_option("--max", max_digits, "digit limit");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "value of a finite continued fraction");
    std::string digits_text;
    eval_cmd->add_option("digits", digits_text, "digits as JSON [[re, im], ...]")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "digit class of k + l i");
    long ck = 0, cl = 0;
    classify_cmd->add_option("k", ck)->required();
    classify_cmd->add_option("l", cl)->required();

    // tessellate
    auto* tess_cmd = app.add_subcommand("tessellate", "SVG of the first-digit cylinders");
    TessellationSpec tess;
    bool no_exceptional = false;
    tess_cmd->add_option("--norm-max", tess.norm_sq_max, "largest k^2 + l^2 drawn");
    tess_cmd->add_flag("--no-exceptional", no_exceptional, "omit the sixteen exceptional cylinders");
    tess_cmd->add_option("--stroke", tess.stroke);
    tess_cmd->add_option("--size", tess.viewport_px, "viewport in pixels");

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "convergence exponent of |S|");
    std::string tau_set = "lattice";
    std::optional<std::size_t> tau_horizon;
    std::string tau_csv;
    tau_cmd->add_option("--set", tau_set, "digit set (D2, lattice, nonzero, norm>=M, list:...)");
    tau_cmd->add_option("--horizon", tau_horizon, "number of terms (default 10^6)");
    tau_cmd->add_option("--trajectory", tau_csv, "also write the trajectory CSV here");

    // pressure
    auto* pressure_cmd = app.add_subcommand("pressure", "partition function and pressure bracket");
    std::string alphabet_spec;
    int pn = 1;
    std::vector<double> ps{1.0};
    std::string pmode = "sup";
    double prune = 0.0;
    double k0_override = 0.0;
    pressure_cmd->add_option("--alphabet", alphabet_spec, "finite alphabet (list:k,l;... or @file.json)")->required();
    pressure_cmd->add_option("-n,--length", pn, "word length")->check(CLI::PositiveNumber);
    pressure_cmd->add_option("-s", ps, "exponent(s)");
    pressure_cmd->add_option("--mode", pmode)->check(CLI::IsMember({"sup", "base"}));
    pressure_cmd->add_option("--prune", prune, "branch-and-bound tolerance");
    pressure_cmd->add_option("--k0", k0_override, "distortion constant (default: estimated)");

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "Bowen dimension bracket of a finite alphabet");
    int n_max = 12;
    dim_cmd->add_option("--alphabet", alphabet_spec, "finite alphabet (list:k,l;... or @file.json)")->required();
    dim_cmd->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    dim_cmd->add_option("--k0", k0_override, "distortion constant (default: estimated)");

    // schedule
    auto* sched_cmd = app.add_subcommand("schedule", "block schedule (z_m, S_m, t_m) and its checks");
    std::string sched_set = "D2", growth = "n+3", subexp_csv;
    double eps = 0.5, delta = 0.1;
    std::vector<std::int64_t> chain_n;
    sched_cmd->add_option("--set", sched_set);
    sched_cmd->add_option("--f", growth, "growth function of n, e.g. n+3 or max(3, sqrt(n))");
    sched_cmd->add_option("--eps", eps);
    sched_cmd->add_option("--delta", delta);
    sched_cmd->add_option("--chain", chain_n, "steps n at which to evaluate the lower-bound chain");
    sched_cmd->add_option("--subexp", subexp_csv, "write the log #I(n) / n trajectory CSV here");

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "least cutoff N of the covering upper bound");
    std::string thr_set = "D2";
    thr_cmd->add_option("--set", thr_set);
    thr_cmd->add_option("--eps", eps);
    thr_cmd->add_option("--k0", k0_override, "distortion constant (default: estimated)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a bundled invariant suite");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite)->check(CLI::IsMember(verify_suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto default_k0 = [&] { return k0_override > 0 ? k0_override : distortion_estimate(3, 8, 16).k0(); };

    try {
        const RunConfig cfg = load_config(g);

        if (*expand_cmd) {
            const auto z = parse_gaussian_rational(z_text);
            const auto res = expand(z, max_digits.value_or(cfg.max_digits));
            const bool roundtrip = res.terminated && evaluate(res.digits) == z;
            emit(g, expansion_to_json(z, res, roundtrip));
            return res.terminated && !roundtrip ? kExitCheckFailed : kExitOk;
        }
        if (*eval_cmd) {
            const auto word = digits_from_json(digits_text);
            const auto v = evaluate(word);
            json j;
            j["digits"] = json::parse(digits_to_json(word));
            j["value"] = v.to_string();
            j["approx"] = json::array({decimal(v.re, cfg.precision_bits), decimal(v.im, cfg.precision_bits)});
            emit(g, j.dump(2) + "\n");
            return kExitOk;
        }
        if (*classify_cmd) {
            const GaussianInt d(ck, cl);
            json j;
            j["digit"] = json::array({ck, cl});
            j["norm_sq"] = d.norm_sq().get_si();
            j["class"] = to_string(classify_digit(d));
            emit(g, j.dump(2) + "\n");
            return kExitOk;
        }
        if (*tess_cmd) {
            tess.include_exceptional = !no_exceptional;
            emit(g, render_svg(tessellation_regions(tess), tess));
            return kExitOk;
        }
        if (*tau_cmd) {
            const auto set = DigitSet::parse(tau_set);
            const auto est = tau_exponent(digit_set_moduli(set, tau_horizon.value_or(1'000'000)));
            if (!tau_csv.empty()) write_file(tau_csv, tau_trajectory_csv(est));
            emit(g, g.format == "csv" ? tau_trajectory_csv(est) : tau_to_json(est));
            return kExitOk;
        }
        if (*pressure_cmd) {
            const auto alphabet = ifs_alphabet(load_digit_set(alphabet_spec));
            PartitionOptions opt;
            opt.max_words = cfg.max_words;
            opt.prune_tol = prune;
            opt.k0 = default_k0();
            std::vector<PressureEstimate> rows;
            for (double s : ps) {
                rows.push_back(partition_sum(alphabet, pn, s, pmode == "sup" ? NormMode::sup_norm : NormMode::base_point, opt));
            }
            if (g.format == "csv") {
                emit(g, pressure_to_csv(rows));
            } else if (rows.size() == 1) {
                emit(g, pressure_to_json(rows.front()));
            } else {
                std::string text = "[\n";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    auto one = pressure_to_json(rows[i]);
                    one.pop_back();
                    text += one + (i + 1 < rows.size() ? ",\n" : "\n");
                }
                emit(g, text + "]\n");
            }
            return kExitOk;
        }
        if (*dim_cmd) {
            const auto alphabet = ifs_alphabet(load_digit_set(alphabet_spec));
            BowenOptions opt;
            opt.tol = cfg.bisection_tol;
            opt.n_max = n_max;
            opt.max_words = cfg.max_words;
            opt.k0 = default_k0();
            const auto r = bowen_dimension(alphabet, opt);
            emit(g, bowen_to_json(r));
            return r.midpoints_monotone ? kExitOk : kExitCheckFailed;
        }
        if (*sched_cmd) {
            const auto set = DigitSet::parse(sched_set);
            const auto f = GrowthFunction::parse(growth);
            const auto sched = build_schedule(set, f, eps, cfg.horizon, cfg.ratio_tol);
            const auto checks = validate_schedule(set, f, sched);
            const auto sub = subexp_check(sched);
            if (!subexp_csv.empty()) write_file(subexp_csv, subexp_to_csv(sub));
            bool ok = sub.passed;
            for (const auto& c : checks) ok = ok && c.passed;
            if (g.format == "csv") {
                emit(g, subexp_to_csv(sub));
            } else {
                json j = json::parse(schedule_to_json(sched, checks));
                j["subexp_final_window_max"] = sub.final_window_max;
                j["subexp_passed"] = sub.passed;
                if (!chain_n.empty()) {
                    json chains = json::array();
                    for (auto n : chain_n) {
                        const auto c = verify_lower_bound_chain(set, sched, eps, delta, n);
                        json cj = json::parse(chain_to_json(c));
                        cj["n"] = n;
                        chains.push_back(cj);
                        ok = ok && c.positive;
                    }
                    j["lower_bound_chain"] = chains;
                }
                emit(g, j.dump(2) + "\n");
            }
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (*thr_cmd) {
            const auto set = DigitSet::parse(thr_set);
            const auto r = upper_threshold(set, eps, UpperConstants::from_k0(default_k0()));
            emit(g, threshold_to_json(r));
            return kExitOk;
        }
        if (*verify_cmd) {
            const auto rep = run_verify_suite(suite, cfg);
            emit(g, rep.to_json());
            return rep.passed() ? kExitOk : kExitCheckFailed;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << " (partial sum " << e.partial_sum() << ", truncation bound "
                  << e.truncation_bound() << ")\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
