#pragma once

#include <cstdint>
#include <string>

namespace hurwitz {

struct RunConfig {
    int precision_bits = 128;
    std::uint64_t seed = 0x5eed5eedULL;
    std::uint64_t max_words = 2'000'000;
    std::uint64_t max_digits = 4096;
    std::int64_t horizon = 10'000;
    double bisection_tol = 1e-3;
    double ratio_tol = 0.5;
    double float_tol = 1e-12;

    /// Throws PreconditionError if a budget or tolerance is not positive.
    void validate() const;

    /// Apply one key=value setting. Throws ParseError on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);

    /// key = value lines; '#' starts a comment.
    static RunConfig parse(const std::string& text);
    static RunConfig load(const std::string& path);

    std::string to_text() const;
};

}  // namespace hurwitz
