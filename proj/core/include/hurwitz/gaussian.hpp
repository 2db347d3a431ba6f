#pragma once

// Exact arithmetic in Z[i] and Q(i), nearest-lattice rounding, and
// norm-ordered enumeration of the Gaussian lattice.

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

struct GaussianInt {
    mpz_class re{0};
    mpz_class im{0};

    GaussianInt() = default;
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    mpz_class norm_sq() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }

    /// Value as signed 64-bit components; throws DomainError on overflow.
    std::int64_t re_i64() const;
    std::int64_t im_i64() const;
};

/// (norm, re, im) order: the deterministic enumeration order.
bool norm_less(const GaussianInt& a, const GaussianInt& b);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

/// Element of Q(i) with both coordinates in canonical reduced form.
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i);
    GaussianRational(const GaussianInt& z) : re(z.re), im(z.im) {}  // NOLINT: lattice embeds in the field

    /// (p/q) + (r/s) i, canonicalised.
    static GaussianRational from_fractions(long p, long q, long r, long s);

    mpq_class norm_sq() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    /// Throws DomainError on zero.
    GaussianRational reciprocal() const;

    double re_double() const { return re.get_d(); }
    double im_double() const { return im.get_d(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a);
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string to_string() const;  // "p/q+r/s i"
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parse "p/q+r/s i", "p/q-r/s i", "p+r i", "p/q" (whitespace tolerant).
GaussianRational parse_gaussian_rational(const std::string& text);

/// floor(x + 1/2), exact.
mpz_class round_half_up(const mpq_class& x);

/// floor(re + 1/2) + i floor(im + 1/2).
GaussianInt nearest_round(const GaussianRational& z);

/// -1/2 <= re < 1/2 and -1/2 <= im < 1/2.
bool in_unit_box(const GaussianRational& z);

/// -1/2 <= re <= 1/2 and -1/2 <= im <= 1/2.
bool in_closed_unit_box(const GaussianRational& z);

/// #(Z[i] intersected with [-N,N]^2), counted point by point.
std::uint64_t count_in_square(std::uint64_t n);

/// Lightweight lattice point for bulk enumeration.
struct LatticePoint {
    std::int64_t re = 0;
    std::int64_t im = 0;

    std::int64_t norm_sq() const { return re * re + im * im; }
    GaussianInt to_gaussian() const { return GaussianInt(static_cast<long>(re), static_cast<long>(im)); }
    auto operator<=>(const LatticePoint&) const = default;
};

/// Order by (norm_sq, re, im).
bool norm_order(const LatticePoint& a, const LatticePoint& b);

/// First `limit` lattice points in norm order.
std::vector<LatticePoint> enumerate_lattice_by_norm(bool include_zero, std::size_t limit);

/// All lattice points with lo <= norm_sq <= hi, in norm order.
std::vector<LatticePoint> lattice_points_in_norm_range(std::int64_t lo, std::int64_t hi);

/// First `limit` Gaussian integers sorted by norm, ties by (re, im).
std::vector<GaussianInt> enumerate_by_norm(bool include_zero, std::size_t limit);

}  // namespace hurwitz
