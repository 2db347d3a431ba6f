#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hurwitz/conformal_ifs.hpp"
#include "hurwitz/errors.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

GaussianRational q(long p1, long q1, long p2, long q2) { return GaussianRational::from_fractions(p1, q1, p2, q2); }

std::vector<oracle::C> to_c(const DigitWord& w) {
    std::vector<oracle::C> out;
    for (const auto& d : w) out.emplace_back(d.re.get_d(), d.im.get_d());
    return out;
}

std::vector<MobiusBranch> d2_branches(long max_norm) {
    std::vector<MobiusBranch> out;
    for (long k = -16; k <= 16; ++k)
        for (long l = -16; l <= 16; ++l)
            if (k * k + l * l >= 8 && k * k + l * l <= max_norm) out.emplace_back(k, l);
    return out;
}

}  // namespace

TEST(MobiusBranch, RejectsIndicesOutsideD2) {
    EXPECT_THROW(MobiusBranch(2, 1), DomainError);
    EXPECT_THROW(BranchComposition::from_word({{1, 1}}), DomainError);
    EXPECT_NO_THROW(MobiusBranch(2, 2));
    EXPECT_NO_THROW(MobiusBranch(0, -3));
}

TEST(BranchApply, Examples) {
    EXPECT_EQ(branch_apply(MobiusBranch(2, 2), GaussianRational()), q(1, 4, -1, 4));
    EXPECT_EQ(branch_apply(MobiusBranch(-2, 2), GaussianRational()), q(-1, 4, -1, 4));
    EXPECT_EQ(branch_apply(MobiusBranch(2, 2), q(-1, 2, -1, 2)), q(1, 3, -1, 3));
    const auto f = branch_apply(MobiusBranch(3, 1), std::complex<double>(0.1, -0.2));
    const auto ref = 1.0 / std::complex<double>(3.1, 0.8);
    EXPECT_NEAR(std::abs(f - ref), 0.0, 1e-15);
}

TEST(Composition, MatrixMatchesNestedFractionAndUnitDeterminant) {
    const DigitWord w{{2, 2}, {-3, 1}, {0, 4}};
    const auto comp = BranchComposition::from_word(w);
    EXPECT_EQ(comp.matrix.determinant().norm_sq(), 1);
    const auto z = q(1, 7, -2, 9);
    // 1/(c1 + 1/(c2 + 1/(c3 + z)))
    GaussianRational v = z;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = (GaussianRational(*it) + v).reciprocal();
    EXPECT_EQ(comp.matrix.apply(z), v);
}

TEST(DerivativeModulus, Examples) {
    const auto one = BranchComposition::from_word({{2, 2}});
    EXPECT_EQ(derivative_modulus(one, GaussianRational()), mpq_class(1, 8));
    EXPECT_EQ(derivative_modulus(one, q(-1, 2, -1, 2)), mpq_class(2, 9));
    const auto two = BranchComposition::from_word({{2, 2}, {2, 2}});
    EXPECT_EQ(derivative_modulus(two, GaussianRational()), mpq_class(1, 65));
}

TEST(DerivativeModulus, MatrixFormulaMatchesChainRule) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coord(-9, 9);
    std::uniform_real_distribution<double> box(-0.5, 0.5);
    for (int trial = 0; trial < 200; ++trial) {
        DigitWord w;
        const int len = 1 + trial % 5;
        while (static_cast<int>(w.size()) < len) {
            const long k = coord(rng), l = coord(rng);
            if (k * k + l * l >= 8) w.emplace_back(k, l);
        }
        const auto comp = BranchComposition::from_word(w);
        const oracle::Q z = oracle::random_point_in_u(rng, 100);
        const GaussianRational gz(z.re, z.im);
        EXPECT_EQ(derivative_modulus(comp, gz), derivative_modulus_chain(w, gz));
        const std::complex<double> zf(box(rng), box(rng));
        const double matrix = derivative_modulus(comp, zf);
        const double chain = static_cast<double>(oracle::chain_rule_derivative(to_c(w), oracle::C(zf.real(), zf.imag())));
        EXPECT_NEAR(matrix / chain, 1.0, 1e-12);
        EXPECT_NEAR(derivative_modulus_chain(w, zf) / chain, 1.0, 1e-12);
    }
}

TEST(DecayConstants, ValuesAndTightness) {
    const auto c = two_decaying_constants();
    EXPECT_EQ(c.c1, mpq_class(16, 25));
    EXPECT_EQ(c.c2, mpq_class(16, 9));
    const auto b = BranchComposition::from_word({{2, 2}});
    EXPECT_EQ(derivative_modulus(b, q(1, 2, 1, 2)), c.c1 / 8);
    EXPECT_EQ(derivative_modulus(b, q(-1, 2, -1, 2)), c.c2 / 8);
    const auto far = BranchComposition::from_word({{6, 8}});
    const mpq_class at0 = derivative_modulus(far, GaussianRational());
    EXPECT_EQ(at0, mpq_class(1, 100));
    EXPECT_LE(c.c1 / 100, at0);
    EXPECT_GE(c.c2 / 100, at0);
}

TEST(DecayConstants, HoldOnGridForLowBranches) {
    const double c1 = 16.0 / 25.0, c2 = 16.0 / 9.0;
    for (const auto& b : d2_branches(64)) {
        const double n = static_cast<double>(b.norm_sq());
        for (int i = 0; i <= 31; ++i)
            for (int j = 0; j <= 31; ++j) {
                const oracle::C z(-0.5L + i / 31.0L, -0.5L + j / 31.0L);
                const double d = static_cast<double>(1.0L / std::norm(z + oracle::C(b.k(), b.l())));
                EXPECT_GE(d * n, c1 - 1e-15);
                EXPECT_LE(d * n, c2 + 1e-15);
            }
    }
}

TEST(SupDerivative, ExactAgainstPoleDistanceOracle) {
    for (const auto& b : d2_branches(100)) {
        const auto comp = BranchComposition::from_word({b.digit()});
        const double exact = sup_derivative(comp).get_d();
        const double ref = static_cast<double>(oracle::sup_derivative(to_c({b.digit()})));
        EXPECT_NEAR(exact / ref, 1.0, 1e-14);
        EXPECT_GE(exact, static_cast<double>(oracle::grid_sup_derivative(to_c({b.digit()}), 40)) * (1 - 1e-14));
    }
    // (0,3): the nearest box point to -3i is -i/2, giving 1/|5i/2|^2 = 4/25
    EXPECT_EQ(sup_derivative(BranchComposition::from_word({{0, 3}})), mpq_class(4, 25));
}

TEST(ContractionBound, SupIsTwoNinthsAtNormEight) {
    const auto r = contraction_bound();
    EXPECT_EQ(r.sup, mpq_class(2, 9));
    EXPECT_TRUE(r.below_two_thirds);
    EXPECT_LT(r.sup, mpq_class(2, 3));
    ASSERT_FALSE(r.argmax.empty());
    for (const auto& d : r.argmax) EXPECT_EQ(d.norm_sq(), 8);
    EXPECT_LT(r.tail_bound, 2.0 / 9.0);
}

TEST(ContractionBound, ShellEnvelopeBracketsEveryBranch) {
    // per-shell sups sit between 1/(|i| + sqrt2/2)^2 and 1/(|i| - sqrt2/2)^2
    for (const auto& b : d2_branches(256)) {
        const double r = std::sqrt(static_cast<double>(b.norm_sq()));
        const double sup = sup_derivative(BranchComposition::from_word({b.digit()})).get_d();
        EXPECT_LE(sup, 1.0 / ((r - std::sqrt(0.5)) * (r - std::sqrt(0.5))) * (1 + 1e-14));
        EXPECT_GE(sup, 1.0 / ((r + std::sqrt(0.5)) * (r + std::sqrt(0.5))) * (1 - 1e-14));
    }
}

TEST(Distortion, SingleBranchExactIsTwentyFiveNinths) {
    mpq_class best = 0;
    for (const auto& b : d2_branches(100)) best = std::max(best, word_distortion(BranchComposition::from_word({b.digit()})));
    EXPECT_EQ(best, mpq_class(25, 9));
    EXPECT_EQ(word_distortion(BranchComposition::from_word({{2, 2}})), mpq_class(25, 9));
    EXPECT_EQ(word_distortion(BranchComposition::from_word({})), mpq_class(1));
}

TEST(Distortion, SampledEstimateForShortWords) {
    const auto e1 = distortion_estimate(1, 8, 16);
    EXPECT_NEAR(e1.k0(), 25.0 / 9.0, 1e-12);
    EXPECT_FALSE(e1.rigorous);
    EXPECT_EQ(e1.single_branch_exact, mpq_class(25, 9));
    const auto e2 = distortion_estimate(2, 8, 16);
    EXPECT_GE(e2.k0(), e1.k0());
    EXPECT_TRUE(std::isfinite(e2.k0()));
    EXPECT_GE(e2.sampled_k0, 25.0 / 9.0 - 1e-12);
    EXPECT_LE(e2.sampled_k0, e2.word_exact_k0 + 1e-12);
}

TEST(Distortion, SampledNeverExceedsExactPerWord) {
    for (const DigitWord& w : {DigitWord{{2, 2}}, DigitWord{{3, 1}, {-2, 2}}, DigitWord{{0, 3}, {3, 0}, {2, -2}}}) {
        const auto comp = BranchComposition::from_word(w);
        EXPECT_LE(sampled_distortion(comp, 16), word_distortion(comp).get_d() * (1 + 1e-12));
        EXPECT_GE(sampled_distortion(comp, 16), 1.0);
    }
}

TEST(DiameterBounds, ContainMonteCarloAndExactDiameters) {
    const double k0 = distortion_estimate(2, 8, 16).k0();
    const auto w22 = BranchComposition::from_word({{2, 2}});
    const auto b22 = word_diameter_bounds(w22, k0);
    EXPECT_LE(b22.lower, b22.upper);
    const double mc = sampled_image_diameter(w22, 4000, 1);
    EXPECT_GE(mc, b22.lower);
    EXPECT_LE(mc, b22.upper);
    EXPECT_NEAR(b22.lower, (1.0 / (3.0 * k0)) / 8.0, 1e-15);
    EXPECT_NEAR(b22.upper, k0 * std::sqrt(2.0) / 8.0, 1e-15);

    // U_{3,0}: image of the box under 1/(z+3), symmetric about the real axis; it spans
    // Re from 1/(7/2) to 1/(5/2) at the real points, and the far corners set the height
    const auto w30 = BranchComposition::from_word({{3, 0}});
    const auto b30 = word_diameter_bounds(w30, k0);
    const double exact_width = 1.0 / 2.5 - 1.0 / 3.5;
    const double mc30 = sampled_image_diameter(w30, 4000, 2);
    EXPECT_GE(mc30, exact_width - 1e-12);
    EXPECT_GE(exact_width, b30.lower);
    EXPECT_LE(mc30, b30.upper);
}

TEST(Separation, DisjointImagesAndFirstDigits) {
    const auto r = verify_separation({MobiusBranch(2, 2), MobiusBranch(2, 3)}, 10000, 4);
    EXPECT_TRUE(r.ok);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_GE(r.points_checked, 10000u);
    EXPECT_TRUE(verify_separation({MobiusBranch(3, 0)}, 100, 5).ok);
    const auto center = branch_apply(MobiusBranch(2, 2), GaussianRational());
    EXPECT_EQ(hurwitz_step(center).digit, GaussianInt(2, 2));
}

TEST(BallInclusion, Examples) {
    EXPECT_TRUE(ball_inclusion_check(BranchComposition::from_word({{2, 2}}), {0, 0}, 0.5, 25.0 / 9.0));
    EXPECT_TRUE(ball_inclusion_check(BranchComposition::from_word({{2, 2}}), {0, 0}, 0.0, 25.0 / 9.0));
    const double k0 = distortion_estimate(2, 8, 16).k0();
    EXPECT_TRUE(ball_inclusion_check(BranchComposition::from_word({{3, 1}}), {0, 0}, 0.5, k0));
    EXPECT_TRUE(ball_inclusion_check(BranchComposition::from_word({{3, 1}, {-2, 2}}), {0, 0}, 0.5, k0));
}

TEST(Nesting, BranchImagesStayInsidePaddedBox) {
    // phi(closed box) in closed box, and phi(U(r0)) in U(r0) with r0 = 1/4
    const double r0 = 0.25;
    for (const auto& b : d2_branches(64)) {
        for (int i = 0; i < 400; ++i) {
            const double t = i / 400.0;
            for (const double pad : {0.0, r0}) {
                const double e = 0.5 + pad;
                const std::complex<double> pts[4] = {{-e + 2 * e * t, -e}, {e, -e + 2 * e * t}, {e - 2 * e * t, e}, {-e, e - 2 * e * t}};
                for (const auto& z : pts) {
                    const auto w = branch_apply(b, z);
                    EXPECT_LE(std::abs(w.real()), e + 1e-15);
                    EXPECT_LE(std::abs(w.imag()), e + 1e-15);
                }
            }
        }
    }
}

TEST(Metadata, Constants) {
    const auto m = hurwitz_ifs_metadata();
    EXPECT_DOUBLE_EQ(m.contraction_gamma, 2.0 / 3.0);
    EXPECT_EQ(m.contraction_m, 1);
    EXPECT_EQ(m.domain_pad_r0, mpq_class(1, 4));
    EXPECT_TRUE(m.base_point_zeta.is_zero());
    EXPECT_EQ(m.inner_radius_delta, mpq_class(1, 2));
}
