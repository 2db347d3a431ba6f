#include "hurwitz/run_config.hpp"

#include <fstream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream is(value);
    T out{};
    if (value.rfind("0x", 0) == 0 || value.rfind("0X", 0) == 0) is >> std::hex;
    is >> out;
    if (is.fail() || !is.eof()) throw ParseError("bad value '" + value + "' for " + key);
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (precision_bits <= 0) throw PreconditionError("precision_bits must be positive");
    if (max_words == 0 || max_digits == 0 || horizon <= 0) throw PreconditionError("budgets must be positive");
    if (!(bisection_tol > 0) || !(ratio_tol > 0) || !(float_tol > 0)) {
        throw PreconditionError("tolerances must be positive");
    }
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "precision_bits") precision_bits = parse_number<int>(key, value);
    else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
    else if (key == "max_words") max_words = parse_number<std::uint64_t>(key, value);
    else if (key == "max_digits") max_digits = parse_number<std::uint64_t>(key, value);
    else if (key == "horizon") horizon = parse_number<std::int64_t>(key, value);
    else if (key == "bisection_tol") bisection_tol = parse_number<double>(key, value);
    else if (key == "ratio_tol") ratio_tol = parse_number<double>(key, value);
    else if (key == "float_tol") float_tol = parse_number<double>(key, value);
    else throw ParseError("unknown config key '" + key + "'");
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string RunConfig::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "precision_bits = " << precision_bits << '\n'
       << "seed = " << seed << '\n'
       << "max_words = " << max_words << '\n'
       << "max_digits = " << max_digits << '\n'
       << "horizon = " << horizon << '\n'
       << "bisection_tol = " << bisection_tol << '\n'
       << "ratio_tol = " << ratio_tol << '\n'
       << "float_tol = " << float_tol << '\n';
    return os.str();
}

}  // namespace hurwitz
