#include <gtest/gtest.h>

#include <set>

#include "hurwitz/digit_set.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

TEST(DigitSet, ParseForms) {
    EXPECT_EQ(DigitSet::parse("D2").name(), "D2");
    EXPECT_EQ(*DigitSet::parse("D2").cofinite_from(), 8);
    EXPECT_EQ(*DigitSet::parse("lattice").cofinite_from(), 0);
    EXPECT_EQ(*DigitSet::parse("nonzero").cofinite_from(), 1);
    EXPECT_EQ(*DigitSet::parse("norm>=50").cofinite_from(), 50);
    const auto ann = DigitSet::parse("annulus:8:10");
    EXPECT_TRUE(ann.is_finite());
    EXPECT_EQ(ann.finite_members().size(), 16u);  // norms 8, 9 and 10 carry 4, 4 and 8 points
    const auto list = DigitSet::parse("list:2,2;-2,-2;2,2");
    EXPECT_EQ(list.finite_members().size(), 2u);
    EXPECT_THROW(DigitSet::parse("bogus"), ParseError);
    EXPECT_THROW(DigitSet::parse("list:"), ParseError);
    EXPECT_THROW(DigitSet::parse("list:1;2"), ParseError);
    EXPECT_THROW(DigitSet::parse("annulus:3"), ParseError);
    EXPECT_THROW(DigitSet::parse("norm>=x"), ParseError);
}

TEST(DigitSet, AnnulusCountsMatchBruteForce) {
    const auto ann = DigitSet::annulus(8, 10);
    std::size_t expected = 0;
    for (long k = -4; k <= 4; ++k)
        for (long l = -4; l <= 4; ++l) expected += k * k + l * l >= 8 && k * k + l * l <= 10;
    EXPECT_EQ(ann.finite_members().size(), expected);
}

TEST(DigitSet, MembershipAndTau) {
    const auto d2 = DigitSet::d2();
    EXPECT_TRUE(d2.contains({2, 2}));
    EXPECT_FALSE(d2.contains({2, 1}));
    EXPECT_EQ(*d2.known_tau(), 2.0);
    EXPECT_EQ(*DigitSet::finite({{3, 0}}).known_tau(), 0.0);
    const auto evens = DigitSet::predicate([](const LatticePoint& p) { return p.re % 2 == 0 && p.norm_sq() >= 8; }, "even");
    EXPECT_FALSE(evens.known_tau().has_value());
    EXPECT_TRUE(evens.contains({4, 1}));
    EXPECT_FALSE(evens.contains({3, 3}));
    EXPECT_FALSE(evens.is_finite());
}

TEST(DigitSet, CursorIsNormOrderedAndComplete) {
    const auto d2 = DigitSet::d2();
    auto cur = d2.cursor();
    std::vector<LatticePoint> got;
    for (int i = 0; i < 3000; ++i) got.push_back(*cur.next());
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_TRUE(norm_order(got[i - 1], got[i]));
    EXPECT_EQ(got.front().norm_sq(), 8);
    const std::int64_t last = got.back().norm_sq();
    std::size_t inside = 0;
    for (long k = -70; k <= 70; ++k)
        for (long l = -70; l <= 70; ++l) inside += k * k + l * l >= 8 && k * k + l * l < last;
    std::size_t listed = 0;
    for (const auto& p : got) listed += p.norm_sq() < last;
    EXPECT_EQ(inside, listed);
}

TEST(DigitSet, SparsePredicateCursor) {
    const auto axis = DigitSet::predicate([](const LatticePoint& p) { return p.im == 0 && p.re >= 100; }, "axis");
    EXPECT_EQ(axis.min_norm_sq(), 10000);
    const auto first = axis.first(3);
    ASSERT_EQ(first.size(), 3u);
    EXPECT_EQ(first[2], (LatticePoint{102, 0}));
}

TEST(DigitSet, FiniteCursorExhausts) {
    const auto s = DigitSet::finite({{3, 0}, {2, 2}});
    auto cur = s.cursor();
    EXPECT_EQ(*cur.next(), (LatticePoint{2, 2}));
    EXPECT_EQ(*cur.next(), (LatticePoint{3, 0}));
    EXPECT_FALSE(cur.next().has_value());
    EXPECT_EQ(s.first(10).size(), 2u);
    EXPECT_THROW(DigitSet::d2().finite_members(), PreconditionError);
}

TEST(DigitSet, RangeQueries) {
    const auto s = DigitSet::norm_at_least(20);
    const auto pts = s.members_in_norm_range(10, 25);
    for (const auto& p : pts) {
        EXPECT_GE(p.norm_sq(), 20);
        EXPECT_LE(p.norm_sq(), 25);
    }
    EXPECT_EQ(pts.size(), 8u + 12u);  // norm 20: (+-2,+-4),(+-4,+-2); norm 25: (+-3,+-4),(+-4,+-3),(+-5,0),(0,+-5)
}
