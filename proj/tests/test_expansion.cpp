#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hurwitz/conformal_ifs.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/expansion.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

GaussianRational q(long p1, long q1, long p2, long q2) { return GaussianRational::from_fractions(p1, q1, p2, q2); }

DigitWord to_word(const std::vector<std::pair<mpz_class, mpz_class>>& digits) {
    DigitWord w;
    for (const auto& [k, l] : digits) w.emplace_back(k, l);
    return w;
}

}  // namespace

TEST(HurwitzStep, Examples) {
    auto s = hurwitz_step(q(1, 4, -1, 4));
    EXPECT_EQ(s.digit, GaussianInt(2, 2));
    EXPECT_TRUE(s.next.is_zero());

    s = hurwitz_step(q(2, 5, 0, 1));
    EXPECT_EQ(s.digit, GaussianInt(3, 0));
    EXPECT_EQ(s.next, q(-1, 2, 0, 1));

    s = hurwitz_step(q(-1, 2, -1, 2));
    EXPECT_EQ(s.digit, GaussianInt(-1, 1));
    EXPECT_TRUE(s.next.is_zero());
}

TEST(HurwitzStep, RejectsZeroAndPointsOutsideBox) {
    EXPECT_THROW(hurwitz_step(GaussianRational()), DomainError);
    EXPECT_THROW(hurwitz_step(q(1, 2, 0, 1)), DomainError);
    EXPECT_THROW(hurwitz_step(q(0, 1, 1, 2)), DomainError);
}

TEST(Expand, Examples) {
    auto r = expand(GaussianRational());
    EXPECT_TRUE(r.digits.empty());
    EXPECT_TRUE(r.terminated);

    r = expand(q(2, 5, 0, 1));
    EXPECT_EQ(r.digits, (DigitWord{{3, 0}, {-2, 0}}));
    EXPECT_TRUE(r.terminated);
    EXPECT_TRUE(r.remainder.is_zero());

    // the closed corner -1/2 - i/2 lies in U and inverts to -1 + i
    r = expand(q(-1, 2, -1, 2));
    EXPECT_EQ(r.digits, (DigitWord{{-1, 1}}));
    EXPECT_TRUE(r.terminated);

    EXPECT_THROW(expand(q(1, 2, 0, 1)), DomainError);
}

TEST(Expand, DigitLimitLeavesRemainder) {
    const auto z = q(355, 1130, 1, 7);
    const auto full = expand(z);
    ASSERT_TRUE(full.terminated);
    ASSERT_GE(full.digits.size(), 2u);
    const auto cut = expand(z, 1);
    EXPECT_FALSE(cut.terminated);
    EXPECT_EQ(cut.status, ExpansionStatus::digit_limit);
    EXPECT_EQ(cut.digits.size(), 1u);
    EXPECT_FALSE(cut.remainder.is_zero());
}

TEST(Evaluate, Examples) {
    EXPECT_TRUE(evaluate({}).is_zero());
    EXPECT_EQ(evaluate({{2, 2}}), q(1, 4, -1, 4));
    EXPECT_EQ(evaluate({{3, 0}, {-2, 0}}), q(2, 5, 0, 1));
}

TEST(Evaluate, VanishingTailThrows) {
    // 1/(1 + 1/(-1)) divides by zero
    EXPECT_THROW(evaluate({{1, 0}, {-1, 0}}), DomainError);
}

TEST(Expand, MatchesOracleDigitsAndValue) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const oracle::Q z = oracle::random_point_in_u(rng, 2500);
        const GaussianRational gz(z.re, z.im);
        const auto r = expand(gz);
        ASSERT_TRUE(r.terminated);
        const auto ref = oracle::expand(z);
        EXPECT_EQ(r.digits, to_word(ref));
        const oracle::Q back = oracle::evaluate(ref);
        EXPECT_TRUE(oracle::equal(back, z));
        EXPECT_EQ(evaluate(r.digits), gz);
    }
}

TEST(ClassifyDigit, Examples) {
    EXPECT_EQ(classify_digit({1, 0}), DigitClass::invalid);
    EXPECT_EQ(classify_digit({0, 0}), DigitClass::invalid);
    EXPECT_EQ(classify_digit({2, 1}), DigitClass::exceptional);
    EXPECT_EQ(classify_digit({2, 2}), DigitClass::regular);
    EXPECT_EQ(classify_digit({0, 3}), DigitClass::regular);
}

TEST(ExceptionalDigits, SixteenListedPairs) {
    const std::set<std::pair<long, long>> listed{{1, 1},  {1, -1}, {-1, 1}, {-1, -1}, {2, 0},  {-2, 0},
                                                 {0, 2},  {0, -2}, {2, 1},  {2, -1},  {-2, 1}, {-2, -1},
                                                 {1, 2},  {1, -2}, {-1, 2}, {-1, -2}};
    ASSERT_EQ(listed.size(), 16u);
    const auto ex = exceptional_digits();
    EXPECT_EQ(ex.size(), 16u);
    std::set<std::pair<long, long>> got;
    for (const auto& d : ex) got.insert({d.re.get_si(), d.im.get_si()});
    EXPECT_EQ(got, listed);
    // and by classification over a window
    std::set<std::pair<long, long>> scanned;
    for (long k = -5; k <= 5; ++k)
        for (long l = -5; l <= 5; ++l)
            if (classify_digit({k, l}) == DigitClass::exceptional) scanned.insert({k, l});
    EXPECT_EQ(scanned, listed);
}

TEST(CylinderCheck, Examples) {
    EXPECT_TRUE(cylinder_check({{2, 2}}, q(1, 4, -1, 4)));
    EXPECT_FALSE(cylinder_check({{2, 2}}, q(2, 5, 0, 1)));
    EXPECT_TRUE(cylinder_check({}, q(1, 7, 2, 9)));
    EXPECT_THROW(cylinder_check({{2, 1}}, q(1, 7, 0, 1)), DomainError);
}

TEST(CylinderCheck, BranchImagesLandInTheirCylinders) {
    // cylinder identity [c_1..c_n] = phi_{c_1..c_n}(U) on random points, words of length <= 3 over norm <= 16
    std::vector<GaussianInt> letters;
    for (long k = -4; k <= 4; ++k)
        for (long l = -4; l <= 4; ++l)
            if (k * k + l * l >= 8 && k * k + l * l <= 16) letters.emplace_back(k, l);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        DigitWord w;
        const int len = 1 + trial % 3;
        for (int i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
        const auto m = BranchComposition::from_word(w).matrix;
        for (int s = 0; s < 100; ++s) {
            const oracle::Q u = oracle::random_point_in_u(rng, 400);
            const GaussianRational image = m.apply(GaussianRational(u.re, u.im));
            EXPECT_TRUE(cylinder_check(w, image)) << format_digits(w);
        }
    }
}

TEST(Expand, ShiftPropertyOnRegularPrefixes) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
        const oracle::Q z = oracle::random_point_in_u(rng, 5000);
        const GaussianRational gz(z.re, z.im);
        const auto r = expand(gz);
        if (r.digits.size() < 2 || classify_digit(r.digits[0]) != DigitClass::regular) continue;
        const auto next = hurwitz_step(gz).next;
        const auto shifted = expand(next);
        EXPECT_EQ(shifted.digits, DigitWord(r.digits.begin() + 1, r.digits.end()));
        ++checked;
    }
    EXPECT_GE(checked, 100);
}

TEST(ExpandWithRadius, StopsWhenRoundingIsAmbiguous) {
    // 2/5: 1/z = 5/2 sits exactly on a rounding boundary; any positive radius is ambiguous
    const auto r = expand_with_radius(q(2, 5, 0, 1), mpq_class(1, 1000000));
    EXPECT_EQ(r.status, ExpansionStatus::precision_exhausted);
    EXPECT_TRUE(r.digits.empty());
    // a generic point keeps its first digits for a small radius
    const auto z = q(1234, 10007, -2345, 10009);
    const auto exact = expand(z);
    const auto approx = expand_with_radius(z, mpq_class(1, 1000000000));
    ASSERT_GE(exact.digits.size(), approx.digits.size());
    EXPECT_GE(approx.digits.size(), 2u);
    EXPECT_EQ(approx.digits, DigitWord(exact.digits.begin(), exact.digits.begin() + approx.digits.size()));
}

TEST(FormatDigits, Layout) {
    EXPECT_EQ(format_digits({{3, 0}, {-2, 0}}), "3+0i; -2+0i");
    EXPECT_EQ(format_digits({}), "");
}
