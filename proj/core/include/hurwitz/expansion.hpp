#pragma once

// The Hurwitz map H(z) = 1/z - [1/z] on U = [-1/2, 1/2)^2 and the digit
// expansions it generates.

#include <cstddef>
#include <string>
#include <vector>

#include "hurwitz/gaussian.hpp"
#include "hurwitz/mobius.hpp"

namespace hurwitz {

using DigitWord = std::vector<GaussianInt>;

inline constexpr std::size_t kDefaultMaxDigits = 4096;

enum class DigitClass { invalid, exceptional, regular };

const char* to_string(DigitClass c);

/// norm < 2: invalid; 2 <= norm < 8: exceptional; norm >= 8: regular.
DigitClass classify_digit(const GaussianInt& d);

/// The sixteen digits with 2 <= norm < 8, in norm order.
std::vector<GaussianInt> exceptional_digits();

struct HurwitzStep {
    GaussianInt digit;
    GaussianRational next;
};

/// digit = nearest_round(1/z), next = 1/z - digit. Requires z in U, z != 0.
HurwitzStep hurwitz_step(const GaussianRational& z);

enum class ExpansionStatus { terminated, digit_limit, precision_exhausted };

const char* to_string(ExpansionStatus s);

struct ExpansionResult {
    DigitWord digits;
    bool terminated = false;
    GaussianRational remainder;
    ExpansionStatus status = ExpansionStatus::digit_limit;
};

/// Iterate H until the orbit reaches 0 or `max_digits` digits are produced.
ExpansionResult expand(const GaussianRational& z, std::size_t max_digits = kDefaultMaxDigits);

/// Value of the finite continued fraction 1/(c_1 + 1/(c_2 + ...)); empty word is 0.
/// Throws DomainError if some tail c_k + (tail value) vanishes.
GaussianRational evaluate(const DigitWord& word);

/// True iff the first |w| digits of expand(z) equal w. All digits of w must be regular.
bool cylinder_check(const DigitWord& word, const GaussianRational& z);

/// Expansion of a point known only to lie in the closed disk of radius
/// `radius` around `center`. A digit is emitted only when every point of the
/// disk rounds to it; otherwise the result carries precision_exhausted.
ExpansionResult expand_with_radius(const GaussianRational& center, const mpq_class& radius,
                                   std::size_t max_digits = kDefaultMaxDigits);

/// "c1; c2; ..." with each digit printed as a+bi.
std::string format_digits(const DigitWord& word);

}  // namespace hurwitz
