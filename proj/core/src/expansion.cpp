#include "hurwitz/expansion.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

const char* to_string(DigitClass c) {
    switch (c) {
        case DigitClass::invalid: return "invalid";
        case DigitClass::exceptional: return "exceptional";
        case DigitClass::regular: return "regular";
    }
    return "?";
}

const char* to_string(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::terminated: return "terminated";
        case ExpansionStatus::digit_limit: return "digit_limit";
        case ExpansionStatus::precision_exhausted: return "precision_exhausted";
    }
    return "?";
}

DigitClass classify_digit(const GaussianInt& d) {
    const mpz_class n = d.norm_sq();
    if (n < 2) return DigitClass::invalid;
    if (n < 8) return DigitClass::exceptional;
    return DigitClass::regular;
}

std::vector<GaussianInt> exceptional_digits() {
    std::vector<GaussianInt> out;
    for (long k = -3; k <= 3; ++k) {
        for (long l = -3; l <= 3; ++l) {
            GaussianInt d(k, l);
            if (classify_digit(d) == DigitClass::exceptional) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), norm_less);
    return out;
}

HurwitzStep hurwitz_step(const GaussianRational& z) {
    if (z.is_zero()) throw DomainError("Hurwitz map undefined at 0");
    if (!in_unit_box(z)) throw DomainError("point " + z.to_string() + " is outside U");
    const GaussianRational w = z.reciprocal();
    GaussianInt digit = nearest_round(w);
    GaussianRational next = w - GaussianRational(digit);
    return {std::move(digit), std::move(next)};
}

ExpansionResult expand(const GaussianRational& z, std::size_t max_digits) {
    if (!in_unit_box(z)) throw DomainError("point " + z.to_string() + " is outside U");
    ExpansionResult out;
    GaussianRational cur = z;
    while (!cur.is_zero() && out.digits.size() < max_digits) {
        auto step = hurwitz_step(cur);
        out.digits.push_back(std::move(step.digit));
        cur = std::move(step.next);
    }
    out.terminated = cur.is_zero();
    out.status = out.terminated ? ExpansionStatus::terminated : ExpansionStatus::digit_limit;
    out.remainder = std::move(cur);
    return out;
}

GaussianRational evaluate(const DigitWord& word) {
    // suffix continuants, right to left; the d entry of each suffix is the
    // denominator of that tail, so a zero there is a vanishing tail
    MobiusMatrix suffix = MobiusMatrix::identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        suffix = MobiusMatrix::branch(*it) * suffix;
        if (suffix.d.is_zero()) {
            throw DomainError("continued fraction has a vanishing tail at digit " + [&] {
                std::ostringstream os;
                os << *it;
                return os.str();
            }());
        }
    }
    // value at z = 0 is b / d
    return GaussianRational(suffix.b) / GaussianRational(suffix.d);
}

bool cylinder_check(const DigitWord& word, const GaussianRational& z) {
    for (const auto& d : word) {
        if (classify_digit(d) != DigitClass::regular) {
            std::ostringstream os;
            os << "cylinder digit " << d << " is not in D2";
            throw DomainError(os.str());
        }
    }
    const auto res = expand(z, word.size());
    return res.digits == word;
}

ExpansionResult expand_with_radius(const GaussianRational& center, const mpq_class& radius,
                                   std::size_t max_digits) {
    if (sgn(radius) < 0) throw PreconditionError("negative error radius");
    if (sgn(radius) == 0) return expand(center, max_digits);
    if (!in_unit_box(center)) throw DomainError("point " + center.to_string() + " is outside U");

    static const mpq_class half(1, 2);
    ExpansionResult out;
    GaussianRational c = center;
    mpq_class rho = radius;
    out.status = ExpansionStatus::precision_exhausted;
    while (out.digits.size() < max_digits) {
        // the disk must avoid 0 for 1/z to be a disk again
        const mpq_class gap = c.norm_sq() - rho * rho;
        if (sgn(gap) <= 0) break;
        // image of a closed disk under z -> 1/z
        GaussianRational w(c.re / gap, -c.im / gap);
        mpq_class rho_w = rho / gap;
        const GaussianInt lo = nearest_round(GaussianRational(w.re - rho_w, w.im - rho_w));
        const GaussianInt hi = nearest_round(GaussianRational(w.re + rho_w, w.im + rho_w));
        if (!(lo == hi)) break;
        out.digits.push_back(lo);
        c = w - GaussianRational(lo);
        rho = rho_w;
    }
    if (out.digits.size() >= max_digits) out.status = ExpansionStatus::digit_limit;
    out.terminated = false;
    out.remainder = c;
    return out;
}

std::string format_digits(const DigitWord& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << "; ";
        os << word[i];
    }
    return os.str();
}

}  // namespace hurwitz
