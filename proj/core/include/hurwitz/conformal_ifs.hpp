#pragma once

// The inverse branches phi_{k,l}(z) = 1/(z + k + l i), (k,l) in D2, acting on
// the closed unit box, their compositions, and the constants that make the
// family a 2-decaying conformal IFS.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/expansion.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/mobius.hpp"

namespace hurwitz {

/// Index (k, l) of an inverse branch; k^2 + l^2 >= 8.
class MobiusBranch {
public:
    MobiusBranch(long k, long l);
    explicit MobiusBranch(const GaussianInt& digit);

    long k() const { return k_; }
    long l() const { return l_; }
    long norm_sq() const { return k_ * k_ + l_ * l_; }
    GaussianInt digit() const { return GaussianInt(k_, l_); }
    std::complex<double> digit_f() const { return {static_cast<double>(k_), static_cast<double>(l_)}; }

    friend bool operator==(const MobiusBranch&, const MobiusBranch&) = default;

private:
    long k_;
    long l_;
};

/// phi_{w_1} o ... o phi_{w_n} as a Gaussian-integer matrix.
struct BranchComposition {
    MobiusMatrix matrix;
    DigitWord word;

    static BranchComposition from_word(const DigitWord& word);
    static BranchComposition from_branches(const std::vector<MobiusBranch>& branches);
};

/// Contraction, padding and base-ball constants of the Hurwitz IFS.
struct IfsMetadata {
    double contraction_gamma = 2.0 / 3.0;
    int contraction_m = 1;
    mpq_class domain_pad_r0{1, 4};
    GaussianRational base_point_zeta{};
    mpq_class inner_radius_delta{1, 2};
};

IfsMetadata hurwitz_ifs_metadata();

struct DecayConstants {
    mpq_class c1;
    mpq_class c2;
};

/// C1 = 16/25, C2 = 16/9: C1/|i|^2 <= |D phi_i| <= C2/|i|^2 on the closed box.
DecayConstants two_decaying_constants();

GaussianRational branch_apply(const MobiusBranch& b, const GaussianRational& z);
std::complex<double> branch_apply(const MobiusBranch& b, std::complex<double> z);

/// |ad - bc| / |cz + d|^2. For products of branch matrices |ad - bc| = 1, so the
/// value at a Gaussian-rational point is an exact rational.
mpq_class derivative_modulus(const BranchComposition& w, const GaussianRational& z);
double derivative_modulus(const BranchComposition& w, std::complex<double> z);

/// Product of single-branch derivative moduli along the orbit of z.
mpq_class derivative_modulus_chain(const DigitWord& word, const GaussianRational& z);
double derivative_modulus_chain(const DigitWord& word, std::complex<double> z);

/// Squared distance from p to the closed unit box, and to its farthest corner.
mpq_class box_distance_sq(const GaussianRational& p);
mpq_class box_far_distance_sq(const GaussianRational& p);
double box_distance_sq(std::complex<double> p);
double box_far_distance_sq(std::complex<double> p);

/// Exact sup / inf of |D phi_w| over the closed unit box. The sup is attained at
/// the point of the box nearest the pole -d/c, the inf at the farthest corner.
mpq_class sup_derivative(const BranchComposition& w);
mpq_class inf_derivative(const BranchComposition& w);

/// Exact sup/inf ratio over the closed box.
mpq_class word_distortion(const BranchComposition& w);

/// Double-precision sup and inf for matrices built by MobiusMatrixF.
double sup_derivative(const MobiusMatrixF& m);
double inf_derivative(const MobiusMatrixF& m);

struct ContractionReport {
    mpq_class sup;                      // exact supremum over all of D2
    std::vector<GaussianInt> argmax;    // branches attaining it
    long exact_norm_limit = 64;         // branches up to this norm examined exactly
    double tail_bound = 0.0;            // 1/(sqrt(limit) - sqrt2/2)^2 bounds every other branch
    bool below_two_thirds = false;
};

/// Supremum of single-branch derivative moduli over the closed box across D2.
ContractionReport contraction_bound(long exact_norm_limit = 64);

/// Distortion constants. Composition distortion is sampled, not certified.
struct DistortionEstimate {
    double sampled_k0 = 1.0;             // max grid ratio over sampled words
    double word_exact_k0 = 1.0;          // max exact sup/inf over the same words
    mpq_class single_branch_exact{25, 9};
    std::size_t words_examined = 0;
    bool rigorous = false;

    double k0() const { return std::max(sampled_k0, word_exact_k0); }
};

/// Words of length <= max_word_len over the D2 branches with norm <= alphabet_norm_max,
/// ratios sampled on a grid_density x grid_density grid of the closed box.
DistortionEstimate distortion_estimate(int max_word_len, int grid_density, long alphabet_norm_max = 16);

/// Distortion of a single word on a grid (the sampling route on its own).
double sampled_distortion(const BranchComposition& w, int grid_density);

struct DiameterBounds {
    double lower = 0.0;
    double upper = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
};

/// [K1 |D phi_w(0)|, K2 |D phi_w(0)|] with K1 = 2 delta / (3 K0), K2 = K0 sqrt 2, delta = 1/2.
DiameterBounds word_diameter_bounds(const BranchComposition& w, double k0);

/// Diameter of phi_w(closed box) estimated from boundary samples.
double sampled_image_diameter(const BranchComposition& w, int boundary_samples, std::uint64_t seed);

struct SeparationViolation {
    GaussianInt branch;
    GaussianRational point;
    std::string reason;
};

struct SeparationReport {
    bool ok = true;
    std::size_t points_checked = 0;
    std::optional<SeparationViolation> witness;
};

/// Samples interior points of each image phi_b(U), checks the first Hurwitz
/// digit is b and that no point lies in another listed image.
SeparationReport verify_separation(const std::vector<MobiusBranch>& branches, std::size_t samples,
                                   std::uint64_t seed);

/// Samples the circle of radius delta |D phi_w(z)| / (3K) around phi_w(z) and
/// checks each sample pulls back into B_delta(z).
bool ball_inclusion_check(const BranchComposition& w, std::complex<double> center, double delta, double k,
                          int samples = 256);

/// Uniform double in [0, 1) from 53 raw bits; reproducible across platforms.
double unit_uniform(std::uint64_t bits);

}  // namespace hurwitz
