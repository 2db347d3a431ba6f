#include "hurwitz/json_io.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"
#include "json.hpp"

namespace hurwitz {

namespace {

using json = nlohmann::ordered_json;

json digit(const GaussianInt& d) { return json::array({d.re_i64(), d.im_i64()}); }

json digits(const DigitWord& w) {
    json arr = json::array();
    for (const auto& d : w) arr.push_back(digit(d));
    return arr;
}

json pressure(const PressureEstimate& e) {
    json j;
    j["s"] = e.s;
    j["n"] = e.n;
    j["mode"] = to_string(e.mode);
    j["logZ_over_n"] = e.log_zn_over_n;
    j["lo"] = e.lower_bracket;
    j["hi"] = e.upper_bracket;
    j["words"] = e.words;
    j["dropped_mass"] = e.dropped_mass;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string digits_to_json(const DigitWord& word) { return digits(word).dump(); }

DigitWord digits_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("digit word: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("digit word must be a JSON array of [re, im] pairs");
    DigitWord out;
    for (const auto& d : j) {
        if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
            throw ParseError("digit entries must be [re, im] integer pairs");
        }
        out.emplace_back(d[0].get<long>(), d[1].get<long>());
    }
    return out;
}

std::string expansion_to_json(const GaussianRational& input, const ExpansionResult& result, bool roundtrip_ok) {
    json j;
    j["input"] = input.to_string();
    j["digits"] = digits(result.digits);
    j["terminated"] = result.terminated;
    j["status"] = to_string(result.status);
    j["roundtrip"] = roundtrip_ok;
    return dump(j);
}

std::string pressure_to_json(const PressureEstimate& e) { return dump(pressure(e)); }

std::string pressure_to_csv(const std::vector<PressureEstimate>& rows) {
    std::ostringstream os;
    os << "s,n,logZ_over_n,lo,hi\n";
    for (const auto& e : rows) {
        os << num(e.s) << ',' << e.n << ',' << num(e.log_zn_over_n) << ',' << num(e.lower_bracket) << ','
           << num(e.upper_bracket) << '\n';
    }
    return os.str();
}

std::string bowen_to_json(const BowenDimResult& r) {
    json j;
    j["s_low"] = r.s_low;
    j["s_high"] = r.s_high;
    j["n_used"] = r.n_used;
    j["iterations"] = r.iterations;
    j["low_certified"] = r.low_certified;
    j["high_certified"] = r.high_certified;
    j["conclusive"] = r.conclusive;
    j["certified_low"] = r.certified_low;
    j["certified_high"] = r.certified_high;
    j["midpoints_monotone"] = r.midpoints_monotone;
    j["at_low"] = pressure(r.at_low);
    j["at_high"] = pressure(r.at_high);
    return dump(j);
}

std::string threshold_to_json(const ThresholdResult& r) {
    json j;
    j["N"] = r.n;
    j["search_start"] = r.search_start;
    j["exponent"] = r.exponent;
    j["factor"] = r.factor;
    j["tail_at_N"] = static_cast<double>(r.tail_at_n);
    j["value_at_N"] = static_cast<double>(r.value_at_n());
    if (r.tail_before_n) {
        j["value_at_N_minus_1"] = static_cast<double>(static_cast<long double>(r.factor) * *r.tail_before_n);
    } else {
        j["value_at_N_minus_1"] = nullptr;
    }
    j["tail_exact"] = r.tail_exact;
    j["evaluations"] = r.evaluations;
    return dump(j);
}

std::string tau_to_json(const TauEstimate& t) {
    json j;
    j["estimate"] = t.estimate;
    j["running_max"] = t.running_max;
    j["window_last"] = t.window_last;
    j["window"] = json::array({t.window_lo, t.window_hi});
    j["horizon"] = t.horizon;
    return dump(j);
}

std::string tau_trajectory_csv(const TauEstimate& t) {
    std::ostringstream os;
    os << "n,log_n_over_log_x\n";
    for (const auto& p : t.trajectory) os << p.n << ',' << num(p.ratio) << '\n';
    return os.str();
}

std::string schedule_to_json(const NonAutSchedule& s, const std::vector<ScheduleCheck>& checks) {
    json j;
    json anchors = json::array();
    for (const auto& z : s.anchors) anchors.push_back(json::array({z.re, z.im}));
    j["anchors"] = anchors;
    json blocks = json::array();
    for (const auto& b : s.blocks) {
        json o;
        o["norm_lo"] = b.norm_lo;
        o["norm_hi"] = b.norm_hi;
        o["count"] = b.count;
        o["t"] = b.t;
        if (b.partial) o["partial"] = true;
        blocks.push_back(o);
    }
    j["blocks"] = blocks;
    j["horizon"] = s.horizon;
    j["eps"] = s.eps;
    j["tau"] = s.tau;
    j["ratio_tol"] = s.ratio_tol;
    j["truncated"] = s.truncated;
    j["warnings"] = s.warnings;
    json cj = json::array();
    for (const auto& c : checks) {
        json o;
        o["check"] = c.name;
        o["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) o["witness"] = c.witness;
        cj.push_back(o);
    }
    j["validation"] = cj;
    return dump(j);
}

std::string chain_to_json(const LowerBoundChain& c) {
    json j;
    j["s"] = c.s;
    j["delta"] = c.delta;
    j["N"] = c.big_n;
    j["T_N"] = c.t_big_n;
    j["log_bound"] = c.log_bound;
    j["post_log_product"] = c.post_log_product;
    j["post_factors_ok"] = c.post_factors_ok;
    j["block_of_n"] = c.block_of_n;
    j["n_independent"] = c.n_independent;
    j["positive"] = c.positive;
    return dump(j);
}

std::string subexp_to_csv(const SubexpReport& r) {
    std::ostringstream os;
    os << "n,log_card_over_n\n";
    for (const auto& [n, v] : r.trajectory) os << n << ',' << num(v) << '\n';
    return os.str();
}

}  // namespace hurwitz
