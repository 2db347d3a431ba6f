#include "hurwitz/conformal_ifs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

const mpq_class kHalf(1, 2);

std::complex<double> to_complex(const GaussianInt& z) { return {z.re.get_d(), z.im.get_d()}; }

mpq_class abs_q(const mpq_class& v) { return sgn(v) < 0 ? mpq_class(-v) : v; }

}  // namespace

MobiusBranch::MobiusBranch(long k, long l) : k_(k), l_(l) {
    if (k * k + l * l < 8) {
        throw DomainError("branch (" + std::to_string(k) + "," + std::to_string(l) + ") is not in D2");
    }
}

MobiusBranch::MobiusBranch(const GaussianInt& digit)
    : MobiusBranch(static_cast<long>(digit.re_i64()), static_cast<long>(digit.im_i64())) {}

BranchComposition BranchComposition::from_word(const DigitWord& word) {
    for (const auto& d : word) MobiusBranch check(d);
    return {continuant(word), word};
}

BranchComposition BranchComposition::from_branches(const std::vector<MobiusBranch>& branches) {
    DigitWord word;
    word.reserve(branches.size());
    for (const auto& b : branches) word.push_back(b.digit());
    return {continuant(word), std::move(word)};
}

IfsMetadata hurwitz_ifs_metadata() { return {}; }

DecayConstants two_decaying_constants() {
    // |z + i| lies in |i| (1 -+ 1/4) for |z| <= sqrt2/2 and |i| >= sqrt8
    return {mpq_class(16, 25), mpq_class(16, 9)};
}

GaussianRational branch_apply(const MobiusBranch& b, const GaussianRational& z) {
    const GaussianRational den = z + GaussianRational(b.digit());
    if (den.is_zero()) throw DomainError("branch evaluated at its pole");
    return den.reciprocal();
}

std::complex<double> branch_apply(const MobiusBranch& b, std::complex<double> z) {
    const auto den = z + b.digit_f();
    if (den == std::complex<double>(0.0, 0.0)) throw DomainError("branch evaluated at its pole");
    return 1.0 / den;
}

mpq_class derivative_modulus(const BranchComposition& w, const GaussianRational& z) {
    const GaussianInt det = w.matrix.determinant();
    if (det.norm_sq() != 1) throw DomainError("composition determinant is not a unit");
    const GaussianRational den = GaussianRational(w.matrix.c) * z + GaussianRational(w.matrix.d);
    const mpq_class n = den.norm_sq();
    if (sgn(n) == 0) throw DomainError("derivative evaluated at the pole");
    return 1 / n;
}

double derivative_modulus(const BranchComposition& w, std::complex<double> z) {
    const double det = std::abs(to_complex(w.matrix.determinant()));
    const auto den = to_complex(w.matrix.c) * z + to_complex(w.matrix.d);
    const double n = std::norm(den);
    if (n == 0.0) throw DomainError("derivative evaluated at the pole");
    return det / n;
}

mpq_class derivative_modulus_chain(const DigitWord& word, const GaussianRational& z) {
    mpq_class prod = 1;
    GaussianRational cur = z;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const GaussianRational den = cur + GaussianRational(*it);
        const mpq_class n = den.norm_sq();
        if (sgn(n) == 0) throw DomainError("orbit hits a pole");
        prod /= n;
        cur = den.reciprocal();
    }
    return prod;
}

double derivative_modulus_chain(const DigitWord& word, std::complex<double> z) {
    double prod = 1.0;
    auto cur = z;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto den = cur + to_complex(*it);
        const double n = std::norm(den);
        if (n == 0.0) throw DomainError("orbit hits a pole");
        prod /= n;
        cur = 1.0 / den;
    }
    return prod;
}

mpq_class box_distance_sq(const GaussianRational& p) {
    mpq_class dx = abs_q(p.re) - kHalf;
    mpq_class dy = abs_q(p.im) - kHalf;
    if (sgn(dx) < 0) dx = 0;
    if (sgn(dy) < 0) dy = 0;
    return dx * dx + dy * dy;
}

mpq_class box_far_distance_sq(const GaussianRational& p) {
    const mpq_class dx = abs_q(p.re) + kHalf;
    const mpq_class dy = abs_q(p.im) + kHalf;
    return dx * dx + dy * dy;
}

double box_distance_sq(std::complex<double> p) {
    const double dx = std::max(std::abs(p.real()) - 0.5, 0.0);
    const double dy = std::max(std::abs(p.imag()) - 0.5, 0.0);
    return dx * dx + dy * dy;
}

double box_far_distance_sq(std::complex<double> p) {
    const double dx = std::abs(p.real()) + 0.5;
    const double dy = std::abs(p.imag()) + 0.5;
    return dx * dx + dy * dy;
}

mpq_class sup_derivative(const BranchComposition& w) {
    const auto& m = w.matrix;
    if (m.c.is_zero()) return 1 / mpq_class(m.d.norm_sq());
    const GaussianRational pole = -(GaussianRational(m.d) / GaussianRational(m.c));
    const mpq_class dist = box_distance_sq(pole);
    if (sgn(dist) == 0) throw DomainError("composition has its pole in the closed box");
    return 1 / (mpq_class(m.c.norm_sq()) * dist);
}

mpq_class inf_derivative(const BranchComposition& w) {
    const auto& m = w.matrix;
    if (m.c.is_zero()) return 1 / mpq_class(m.d.norm_sq());
    const GaussianRational pole = -(GaussianRational(m.d) / GaussianRational(m.c));
    return 1 / (mpq_class(m.c.norm_sq()) * box_far_distance_sq(pole));
}

mpq_class word_distortion(const BranchComposition& w) { return sup_derivative(w) / inf_derivative(w); }

double sup_derivative(const MobiusMatrixF& m) {
    if (m.c == std::complex<double>(0.0, 0.0)) return 1.0 / std::norm(m.d);
    const auto pole = -m.d / m.c;
    return 1.0 / (std::norm(m.c) * box_distance_sq(pole));
}

double inf_derivative(const MobiusMatrixF& m) {
    if (m.c == std::complex<double>(0.0, 0.0)) return 1.0 / std::norm(m.d);
    const auto pole = -m.d / m.c;
    return 1.0 / (std::norm(m.c) * box_far_distance_sq(pole));
}

ContractionReport contraction_bound(long exact_norm_limit) {
    ContractionReport rep;
    rep.exact_norm_limit = exact_norm_limit;
    rep.sup = 0;
    const auto pts = lattice_points_in_norm_range(8, exact_norm_limit);
    for (const auto& p : pts) {
        const auto comp = BranchComposition::from_word({p.to_gaussian()});
        const mpq_class s = sup_derivative(comp);
        if (s > rep.sup) {
            rep.sup = s;
            rep.argmax.clear();
        }
        if (s == rep.sup) rep.argmax.push_back(p.to_gaussian());
    }
    const double r = std::sqrt(static_cast<double>(exact_norm_limit + 1));
    rep.tail_bound = 1.0 / ((r - std::numbers::sqrt2 / 2) * (r - std::numbers::sqrt2 / 2));
    rep.below_two_thirds = rep.sup < mpq_class(2, 3) && rep.tail_bound < rep.sup.get_d();
    return rep;
}

double sampled_distortion(const BranchComposition& w, int grid_density) {
    if (grid_density < 2) throw PreconditionError("grid density must be at least 2");
    const std::complex<double> c(w.matrix.c.re.get_d(), w.matrix.c.im.get_d());
    const std::complex<double> d(w.matrix.d.re.get_d(), w.matrix.d.im.get_d());
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    const double step = 1.0 / (grid_density - 1);
    for (int i = 0; i < grid_density; ++i) {
        for (int j = 0; j < grid_density; ++j) {
            const std::complex<double> z(-0.5 + i * step, -0.5 + j * step);
            const double v = std::norm(c * z + d);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    // |D phi| = 1/v, so the ratio of extremes is hi/lo
    return hi / lo;
}

DistortionEstimate distortion_estimate(int max_word_len, int grid_density, long alphabet_norm_max) {
    if (max_word_len < 0) throw PreconditionError("negative word length");
    DistortionEstimate est;
    if (max_word_len == 0) return est;
    const auto pts = lattice_points_in_norm_range(8, alphabet_norm_max);
    std::vector<GaussianInt> alphabet;
    for (const auto& p : pts) alphabet.push_back(p.to_gaussian());
    if (alphabet.empty()) throw PreconditionError("empty distortion alphabet");

    std::vector<DigitWord> frontier{DigitWord{}};
    for (int len = 1; len <= max_word_len; ++len) {
        std::vector<DigitWord> next;
        next.reserve(frontier.size() * alphabet.size());
        for (const auto& w : frontier) {
            for (const auto& a : alphabet) {
                DigitWord x = w;
                x.push_back(a);
                const auto comp = BranchComposition::from_word(x);
                est.sampled_k0 = std::max(est.sampled_k0, sampled_distortion(comp, grid_density));
                est.word_exact_k0 = std::max(est.word_exact_k0, word_distortion(comp).get_d());
                ++est.words_examined;
                next.push_back(std::move(x));
            }
        }
        frontier = std::move(next);
    }
    return est;
}

DiameterBounds word_diameter_bounds(const BranchComposition& w, double k0) {
    if (w.word.empty()) throw PreconditionError("diameter bounds need a nonempty word");
    if (!(k0 >= 1.0)) throw PreconditionError("distortion constant must be >= 1");
    const double delta = 0.5;
    DiameterBounds out;
    out.k1 = 2.0 * delta / (3.0 * k0);
    out.k2 = k0 * std::numbers::sqrt2;
    const double dz = derivative_modulus(w, std::complex<double>(0.0, 0.0));
    out.lower = out.k1 * dz;
    out.upper = out.k2 * dz;
    return out;
}

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

double sampled_image_diameter(const BranchComposition& w, int boundary_samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::complex<double>> img;
    img.reserve(static_cast<std::size_t>(boundary_samples) + 4);
    for (double x : {-0.5, 0.5}) {
        for (double y : {-0.5, 0.5}) img.push_back(w.matrix.apply(std::complex<double>(x, y)));
    }
    for (int i = 0; i < boundary_samples; ++i) {
        const double t = 4.0 * unit_uniform(rng());
        const int side = std::min(3, static_cast<int>(t));
        const double s = t - side - 0.5;
        std::complex<double> z;
        switch (side) {
            case 0: z = {s, -0.5}; break;
            case 1: z = {0.5, s}; break;
            case 2: z = {-s, 0.5}; break;
            default: z = {-0.5, -s}; break;
        }
        img.push_back(w.matrix.apply(z));
    }
    double best = 0.0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = i + 1; j < img.size(); ++j) best = std::max(best, std::abs(img[i] - img[j]));
    }
    return best;
}

SeparationReport verify_separation(const std::vector<MobiusBranch>& branches, std::size_t samples,
                                   std::uint64_t seed) {
    if (branches.empty()) throw PreconditionError("separation check needs at least one branch");
    SeparationReport rep;
    std::mt19937_64 rng(seed);
    const mpz_class scale = mpz_class(1) << 21;
    const std::size_t per_branch = std::max<std::size_t>(1, samples / branches.size());
    for (const auto& b : branches) {
        for (std::size_t s = 0; s < per_branch; ++s) {
            // dyadic interior point (2a+1)/2^21 - 1/2 with a < 2^20
            const auto ar = static_cast<long>(rng() >> 44);
            const auto ai = static_cast<long>(rng() >> 44);
            GaussianRational u(mpq_class(mpz_class(2 * ar + 1), scale) - kHalf,
                               mpq_class(mpz_class(2 * ai + 1), scale) - kHalf);
            const GaussianRational z = branch_apply(b, u);
            ++rep.points_checked;
            const auto step = hurwitz_step(z);
            if (!(step.digit == b.digit())) {
                rep.ok = false;
                rep.witness = SeparationViolation{b.digit(), z, "first digit differs from branch index"};
                return rep;
            }
            const GaussianRational inv = z.reciprocal();
            for (const auto& other : branches) {
                if (other == b) continue;
                if (in_unit_box(inv - GaussianRational(other.digit()))) {
                    rep.ok = false;
                    std::ostringstream os;
                    os << "point also lies in the image of " << other.digit();
                    rep.witness = SeparationViolation{b.digit(), z, os.str()};
                    return rep;
                }
            }
        }
    }
    return rep;
}

bool ball_inclusion_check(const BranchComposition& w, std::complex<double> center, double delta, double k,
                          int samples) {
    if (!(delta > 0.0)) return true;
    const double radius = delta * derivative_modulus(w, center) / (3.0 * k);
    if (radius == 0.0) return true;
    const auto image_center = w.matrix.apply(center);
    // inverse of [[a,b],[c,d]] up to the unit determinant
    MobiusMatrix inv{w.matrix.d, -w.matrix.b, -w.matrix.c, w.matrix.a};
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        const auto q = image_center + std::polar(radius, t);
        const auto back = inv.apply(q);
        if (!(std::abs(back - center) < delta)) return false;
    }
    return true;
}

}  // namespace hurwitz
