#pragma once

// 1-cylinders U_{k,l} = {z in U : first Hurwitz digit = k + l i}. Each is the
// image under z -> 1/z of the square [k-1/2, k+1/2) x [l-1/2, l+1/2), so its
// boundary is made of arcs of circles through the origin.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

struct TessellationSpec {
    long norm_sq_max = 25;
    bool include_exceptional = true;
    double stroke = 0.002;
    int viewport_px = 800;
};

/// Image of the line Re w = c (vertical) or Im w = c (horizontal) under 1/w:
/// the circle through 0 with centre 1/(2c) on the real axis, or -1/(2c) i on the imaginary axis.
struct BoundaryCircle {
    bool vertical_line = true;
    mpq_class line;  // c
    mpq_class center_re;
    mpq_class center_im;
    mpq_class radius;
    // membership side: z satisfies Re(1/z) >= c (vertical) / Im(1/z) >= c (horizontal) or <
    bool at_least = true;
    bool strict = false;

    /// True when z (nonzero) is on the admitted side.
    bool admits(std::complex<double> z) const;
};

struct TessellationRegion {
    GaussianInt label;
    bool exceptional = false;
    std::array<GaussianRational, 4> corners;  // images of (k-1/2, l-1/2), (k+1/2, l-1/2), (k+1/2, l+1/2), (k-1/2, l+1/2)
    std::array<BoundaryCircle, 4> edges;      // edge i runs from corner i to corner i+1

    /// z in the region (and in U for exceptional labels).
    bool contains(std::complex<double> z) const;
};

std::vector<TessellationRegion> tessellation_regions(const TessellationSpec& spec);

/// SVG document with one closed arc path per region; exceptional regions are clipped to U.
std::string render_svg(const std::vector<TessellationRegion>& regions, const TessellationSpec& spec);

}  // namespace hurwitz
