#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <regex>

#include "hurwitz/expansion.hpp"
#include "hurwitz/tessellation.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

std::vector<TessellationRegion> regions(long norm_max) {
    TessellationSpec spec;
    spec.norm_sq_max = norm_max;
    return tessellation_regions(spec);
}

}  // namespace

TEST(Tessellation, RegionCounts) {
    EXPECT_EQ(regions(25).size(), 76u);
    EXPECT_EQ(regions(8).size(), 20u);
    EXPECT_EQ(regions(2).size(), 4u);
    TessellationSpec spec;
    spec.include_exceptional = false;
    EXPECT_EQ(tessellation_regions(spec).size(), 60u);
    spec.norm_sq_max = 1;
    EXPECT_THROW(tessellation_regions(spec), std::invalid_argument);
}

TEST(Tessellation, SampledPointsHaveTheLabelAsFirstDigit) {
    // z = 1/w for w uniform in the preimage square; exceptional regions keep z in U only
    const auto regs = regions(25);
    std::mt19937_64 rng(2024);
    const long den = 1 << 20;
    std::uniform_int_distribution<long> frac(1, den - 1);
    for (const auto& r : regs) {
        const long k = r.label.re.get_si(), l = r.label.im.get_si();
        int accepted = 0;
        for (int tries = 0; accepted < 1000 && tries < 200000; ++tries) {
            const mpq_class wx = mpq_class(2 * k - 1, 2) + mpq_class(frac(rng), den);
            const mpq_class wy = mpq_class(2 * l - 1, 2) + mpq_class(frac(rng), den);
            const oracle::Q z = oracle::inv(oracle::make(wx, wy));
            if (!oracle::in_u(z)) {
                ASSERT_TRUE(r.exceptional) << k << "," << l;
                continue;
            }
            ++accepted;
            const auto step = hurwitz_step(GaussianRational(z.re, z.im));
            ASSERT_EQ(step.digit, r.label);
            ASSERT_EQ(oracle::round_half_up(wx), k);
            const std::complex<double> zd(z.re.get_d(), z.im.get_d());
            int owners = 0;
            for (const auto& other : regs) owners += other.contains(zd) ? 1 : 0;
            ASSERT_EQ(owners, 1) << k << "," << l;
            ASSERT_TRUE(r.contains(zd));
        }
        EXPECT_EQ(accepted, 1000) << k << "," << l;
    }
}

TEST(Tessellation, CornersAreImagesOfSquareCorners) {
    for (const auto& r : regions(8)) {
        const long k = r.label.re.get_si(), l = r.label.im.get_si();
        const oracle::Q c0 = oracle::inv(oracle::make(mpq_class(2 * k - 1, 2), mpq_class(2 * l - 1, 2)));
        const oracle::Q c2 = oracle::inv(oracle::make(mpq_class(2 * k + 1, 2), mpq_class(2 * l + 1, 2)));
        EXPECT_EQ(r.corners[0].re, c0.re);
        EXPECT_EQ(r.corners[0].im, c0.im);
        EXPECT_EQ(r.corners[2].re, c2.re);
        EXPECT_EQ(r.corners[2].im, c2.im);
        EXPECT_EQ(r.exceptional, k * k + l * l < 8);
    }
}

TEST(Tessellation, SvgArcsLieOnTheBoundaryCircles) {
    TessellationSpec spec;
    const auto regs = tessellation_regions(spec);
    const std::string svg = render_svg(regs, spec);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    const std::regex path_re("<path data-k=\"(-?\\d+)\" data-l=\"(-?\\d+)\" class=\"(\\w+)\"[^>]* d=\"M (\\S+) (\\S+)([^\"]*)\"");
    const std::regex arc_re(" A (\\S+) \\S+ 0 [01] [01] (\\S+) (\\S+)");
    int paths = 0, clipped = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path_re); it != std::sregex_iterator(); ++it) {
        ++paths;
        const long k = std::stol((*it)[1]), l = std::stol((*it)[2]);
        const bool exceptional = (*it)[3] == "exceptional";
        EXPECT_EQ(exceptional, k * k + l * l < 8);
        if (it->str().find("clip-path") != std::string::npos) ++clipped;
        // edges: Im w = l - 1/2, Re w = k + 1/2, Im w = l + 1/2, Re w = k - 1/2
        const double lines[4] = {l - 0.5, k + 0.5, l + 0.5, k - 0.5};
        const bool vertical[4] = {false, true, false, true};
        double px = std::stod((*it)[4]), py = std::stod((*it)[5]);
        const std::string arcs = (*it)[6];
        int e = 0;
        for (auto a = std::sregex_iterator(arcs.begin(), arcs.end(), arc_re); a != std::sregex_iterator(); ++a, ++e) {
            ASSERT_LT(e, 4);
            const double rad = std::stod((*a)[1]);
            const double c = lines[e];
            EXPECT_NEAR(rad, 1.0 / std::fabs(2 * c), 1e-11);
            // circle through 0: centre 1/(2c) on the real axis, or screen y = 1/(2c) for Im w = c
            const double cx = vertical[e] ? 1 / (2 * c) : 0.0;
            const double cy = vertical[e] ? 0.0 : 1 / (2 * c);
            const double qx = std::stod((*a)[2]), qy = std::stod((*a)[3]);
            EXPECT_NEAR(std::hypot(px - cx, py - cy), rad, 1e-9);
            EXPECT_NEAR(std::hypot(qx - cx, qy - cy), rad, 1e-9);
            px = qx;
            py = qy;
        }
        EXPECT_EQ(e, 4);
    }
    EXPECT_EQ(paths, 76);
    EXPECT_EQ(clipped, 16);
    EXPECT_EQ(svg, render_svg(regs, spec));
}
