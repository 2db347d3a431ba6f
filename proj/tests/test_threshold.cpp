#include <gtest/gtest.h>

#include <cmath>

#include "hurwitz/digit_set.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/threshold.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

// K0 = K1 = C2 = 1, so the factor is K2^{a/2}
UpperConstants with_factor_base(double base) {
    UpperConstants c;
    c.k0 = 1;
    c.k1 = 1;
    c.c2 = 1;
    c.k2 = base;
    return c;
}

}  // namespace

TEST(UpperThreshold, ConstantsFromDistortion) {
    const auto c = UpperConstants::from_k0(3.0);
    EXPECT_DOUBLE_EQ(c.k1, 1.0 / 9.0);
    EXPECT_DOUBLE_EQ(c.k2, 3.0 * std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(c.c2, 16.0 / 9.0);
}

TEST(UpperThreshold, LeastCutoffAgainstIndependentTails) {
    // moderate factors keep N in the hundreds, where the row-integral oracle and
    // enumeration plus rigorous integral bounds are both cheap
    for (const auto& [eps, base] : {std::pair{1.0, 13.5}, {0.5, 4.0}, {2.0, 40.0}}) {
        const auto r = upper_threshold(DigitSet::d2(), eps, with_factor_base(base));
        const double a = 2.0 + eps;
        ASSERT_GT(r.n, 64);
        ASSERT_TRUE(r.tail_before_n.has_value());
        EXPECT_NEAR(r.factor, std::pow(base, a / 2), 1e-12 * r.factor);
        const long double factor = r.factor;

        const long double at_n = oracle::row_integral_tail(r.n, a);
        const long double before = at_n + oracle::annulus_sum(r.n - 1, r.n, a);
        EXPECT_LE(factor * at_n, 1.0L) << "eps " << eps << " N " << r.n;
        EXPECT_GT(factor * before, 1.0L) << "eps " << eps << " N " << r.n;

        // the enumerated bracket must not contradict the decision
        const auto bracket = oracle::enumerated_tail_bracket(r.n, r.n + 600, a);
        EXPECT_LE(factor * bracket.lower, 1.0L);
        const long double before_upper = bracket.upper + oracle::annulus_sum(r.n - 1, r.n, a);
        EXPECT_GT(factor * before_upper, 1.0L);
    }
}

TEST(UpperThreshold, UnitFactorReturnsTheSearchStart) {
    // with factor 1 the full D2 sum at exponent 12 is far below 1, so N is floor(min|S|)
    const auto r = upper_threshold(DigitSet::d2(), 10.0, with_factor_base(1.0));
    EXPECT_EQ(r.n, 2);
    EXPECT_EQ(r.search_start, 2);
    EXPECT_FALSE(r.tail_before_n.has_value());
    EXPECT_LE(r.value_at_n(), 1.0L);
}

TEST(UpperThreshold, FiniteSetsUseDirectSums) {
    const auto s = DigitSet::finite({{3, 0}, {2, 2}, {0, 5}, {6, 8}});
    // tau = 0, a = eps = 1: sum over |i| >= N of 1/|i|
    const auto r = upper_threshold(s, 1.0, with_factor_base(9.0));  // factor 3
    // tails: N<=2: 1/sqrt8+1/3+1/5+1/10 = 0.987 (x3 > 1); N=3: 0.633 (x3 > 1); N in 4..5: 0.3 (x3 <= 1)
    EXPECT_EQ(r.n, 4);
    EXPECT_TRUE(r.tail_exact);
    EXPECT_NEAR(static_cast<double>(r.tail_at_n), 0.3, 1e-15);
}

TEST(UpperThreshold, Errors) {
    const auto c = UpperConstants::from_k0(25.0 / 9.0);
    EXPECT_THROW(upper_threshold(DigitSet::d2(), 0.0, c), PreconditionError);
    EXPECT_THROW(upper_threshold(DigitSet::d2(), -1.0, c), PreconditionError);
    const auto pred = DigitSet::predicate([](const LatticePoint& p) { return p.norm_sq() >= 8; }, "p");
    EXPECT_THROW(upper_threshold(pred, 0.5, c), PreconditionError);
    EXPECT_NO_THROW(upper_threshold(pred, 1.0, with_factor_base(2.0), 2.0));
    // tau + eps <= 2 diverges for infinite sets
    EXPECT_THROW(upper_threshold(pred, 0.5, c, 1.0), PreconditionError);
}
