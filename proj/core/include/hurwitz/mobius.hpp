#pragma once

#include <complex>
#include <vector>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

/// z -> (a z + b) / (c z + d) with Gaussian-integer entries.
struct MobiusMatrix {
    GaussianInt a{1, 0};
    GaussianInt b{0, 0};
    GaussianInt c{0, 0};
    GaussianInt d{1, 0};

    static MobiusMatrix identity() { return {}; }

    /// [[0, 1], [1, digit]]: the inverse branch z -> 1 / (z + digit).
    static MobiusMatrix branch(const GaussianInt& digit) { return {{0, 0}, {1, 0}, {1, 0}, digit}; }

    GaussianInt determinant() const { return a * d - b * c; }

    /// Throws DomainError at the pole.
    GaussianRational apply(const GaussianRational& z) const;

    std::complex<double> apply(std::complex<double> z) const;

    friend MobiusMatrix operator*(const MobiusMatrix& lhs, const MobiusMatrix& rhs);
    friend bool operator==(const MobiusMatrix&, const MobiusMatrix&) = default;
};

/// Product of branch matrices for digits c_1 ... c_n, so that the result maps
/// z to 1/(c_1 + 1/(c_2 + ... + 1/(c_n + z))).
MobiusMatrix continuant(const std::vector<GaussianInt>& digits);

/// Double-precision matrix for fast enumeration; entries are exact while they
/// stay below 2^53.
struct MobiusMatrixF {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};
    std::complex<double> c{0.0, 0.0};
    std::complex<double> d{1.0, 0.0};

    static MobiusMatrixF branch(std::complex<double> digit) { return {{0, 0}, {1, 0}, {1, 0}, digit}; }

    std::complex<double> apply(std::complex<double> z) const { return (a * z + b) / (c * z + d); }

    /// Right-multiply by a branch: (this) o phi_digit.
    MobiusMatrixF then_branch(std::complex<double> digit) const { return {b, a + b * digit, d, c + d * digit}; }
};

}  // namespace hurwitz
