#include "hurwitz/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/expansion.hpp"

namespace hurwitz {

namespace {

const mpq_class kHalf(1, 2);

BoundaryCircle make_circle(bool vertical, const mpq_class& c, bool at_least) {
    BoundaryCircle b;
    b.vertical_line = vertical;
    b.line = c;
    const mpq_class inv = 1 / (2 * c);
    if (vertical) {
        b.center_re = inv;
        b.center_im = 0;
    } else {
        b.center_re = 0;
        b.center_im = -inv;
    }
    b.radius = abs(inv);
    b.at_least = at_least;
    b.strict = !at_least;  // lower edges closed, upper edges open, as for nearest_round
    return b;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << (v == 0.0 ? 0.0 : v);
    return os.str();
}

// screen coordinates: x = Re z, y = -Im z
std::pair<double, double> screen(const GaussianRational& z) { return {z.re.get_d(), -z.im.get_d()}; }

}  // namespace

bool BoundaryCircle::admits(std::complex<double> z) const {
    const std::complex<double> w = 1.0 / z;
    const double v = vertical_line ? w.real() : w.imag();
    const double c = line.get_d();
    if (at_least) return strict ? v > c : v >= c;
    return strict ? v < c : v <= c;
}

bool TessellationRegion::contains(std::complex<double> z) const {
    if (z == std::complex<double>(0.0, 0.0)) return false;
    if (exceptional && !(z.real() >= -0.5 && z.real() < 0.5 && z.imag() >= -0.5 && z.imag() < 0.5)) return false;
    return std::all_of(edges.begin(), edges.end(), [&](const BoundaryCircle& e) { return e.admits(z); });
}

std::vector<TessellationRegion> tessellation_regions(const TessellationSpec& spec) {
    if (spec.norm_sq_max < 2) throw PreconditionError("norm_sq_max must be at least 2");
    std::vector<TessellationRegion> out;
    for (const auto& p : lattice_points_in_norm_range(2, spec.norm_sq_max)) {
        TessellationRegion r;
        r.label = p.to_gaussian();
        r.exceptional = classify_digit(r.label) == DigitClass::exceptional;
        if (r.exceptional && !spec.include_exceptional) continue;
        const mpq_class k(static_cast<long>(p.re)), l(static_cast<long>(p.im));
        const mpq_class x0 = k - kHalf, x1 = k + kHalf, y0 = l - kHalf, y1 = l + kHalf;
        const GaussianRational w[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
        for (int i = 0; i < 4; ++i) r.corners[i] = w[i].reciprocal();
        // bottom, right, top, left edges of the square
        r.edges[0] = make_circle(false, y0, true);
        r.edges[1] = make_circle(true, x1, false);
        r.edges[2] = make_circle(false, y1, false);
        r.edges[3] = make_circle(true, x0, true);
        out.push_back(std::move(r));
    }
    return out;
}

std::string render_svg(const std::vector<TessellationRegion>& regions, const TessellationSpec& spec) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.viewport_px << "\" height=\"" << spec.viewport_px
       << "\" viewBox=\"-0.55 -0.55 1.1 1.1\">\n";
    os << "<defs><clipPath id=\"unit-box\"><rect x=\"-0.5\" y=\"-0.5\" width=\"1\" height=\"1\"/></clipPath></defs>\n";
    os << "<rect x=\"-0.5\" y=\"-0.5\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\""
       << fmt(spec.stroke) << "\"/>\n";
    for (const auto& r : regions) {
        const long k = r.label.re.get_si(), l = r.label.im.get_si();
        os << "<path data-k=\"" << k << "\" data-l=\"" << l << "\" class=\""
           << (r.exceptional ? "exceptional" : "regular") << "\"";
        if (r.exceptional) os << " clip-path=\"url(#unit-box)\"";
        os << " fill=\"" << (r.exceptional ? "#f2d7d5" : "#d6eaf8") << "\" stroke=\"black\" stroke-width=\""
           << fmt(spec.stroke) << "\" d=\"";
        const auto [sx, sy] = screen(r.corners[0]);
        os << "M " << fmt(sx) << ' ' << fmt(sy);
        for (int i = 0; i < 4; ++i) {
            const auto& e = r.edges[i];
            const auto [px, py] = screen(r.corners[i]);
            const auto [qx, qy] = screen(r.corners[(i + 1) % 4]);
            // image of the edge midpoint decides which of the two arcs is the edge
            const mpq_class k0 = mpq_class(static_cast<long>(k));
            const mpq_class l0 = mpq_class(static_cast<long>(l));
            GaussianRational wm;
            switch (i) {
                case 0: wm = {k0, l0 - kHalf}; break;
                case 1: wm = {k0 + kHalf, l0}; break;
                case 2: wm = {k0, l0 + kHalf}; break;
                default: wm = {k0 - kHalf, l0}; break;
            }
            const auto [mx, my] = screen(wm.reciprocal());
            const double cx = e.center_re.get_d(), cy = -e.center_im.get_d();
            constexpr double two_pi = 2 * std::numbers::pi;
            auto angle = [&](double x, double y) { return std::atan2(y - cy, x - cx); };
            auto ccw = [&](double from, double to) {
                double d = std::fmod(to - from, two_pi);
                return d < 0 ? d + two_pi : d;
            };
            const double ap = angle(px, py), aq = angle(qx, qy), am = angle(mx, my);
            const double span = ccw(ap, aq);
            const bool positive = ccw(ap, am) < span;  // increasing screen angle reaches m before q
            const bool large = positive ? span > std::numbers::pi : two_pi - span > std::numbers::pi;
            const double rad = e.radius.get_d();
            os << " A " << fmt(rad) << ' ' << fmt(rad) << " 0 " << (large ? 1 : 0) << ' ' << (positive ? 1 : 0) << ' '
               << fmt(qx) << ' ' << fmt(qy);
        }
        os << " Z\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hurwitz
