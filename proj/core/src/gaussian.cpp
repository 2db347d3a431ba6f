#include "hurwitz/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::int64_t checked_i64(const mpz_class& v) {
    if (!v.fits_slong_p()) {
        throw DomainError("Gaussian integer component does not fit in 64 bits: " + v.get_str());
    }
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace

std::int64_t GaussianInt::re_i64() const { return checked_i64(re); }
std::int64_t GaussianInt::im_i64() const { return checked_i64(im); }

bool norm_less(const GaussianInt& a, const GaussianInt& b) {
    const int c = cmp(a.norm_sq(), b.norm_sq());
    if (c != 0) return c < 0;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    os << z.re.get_str();
    if (sgn(z.im) >= 0) os << '+';
    return os << z.im.get_str() << 'i';
}

GaussianRational::GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
}

GaussianRational GaussianRational::from_fractions(long p, long q, long r, long s) {
    if (q == 0 || s == 0) throw DomainError("zero denominator");
    return {mpq_class(p, q), mpq_class(r, s)};
}

GaussianRational GaussianRational::reciprocal() const {
    const mpq_class n = norm_sq();
    if (sgn(n) == 0) throw DomainError("reciprocal of zero");
    return {re / n, -im / n};
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.reciprocal();
}

std::string GaussianRational::to_string() const {
    std::string out = re.get_num().get_str() + "/" + re.get_den().get_str();
    out += sgn(im) < 0 ? "-" : "+";
    mpq_class a = abs(im);
    out += a.get_num().get_str() + "/" + a.get_den().get_str() + " i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse complex rational '" + s + "' at offset " + std::to_string(pos) + ": " + why);
    }
    mpz_class integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return mpz_class(s.substr(start, pos - start), 10);
    }
    // unsigned rational: digits [/ digits]
    mpq_class magnitude() {
        mpz_class num = integer();
        mpz_class den = 1;
        if (accept('/')) den = integer();
        if (den == 0) fail("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
};

}  // namespace

GaussianRational parse_gaussian_rational(const std::string& text) {
    Cursor c{text};
    mpq_class re = 0;
    mpq_class im = 0;
    bool seen_re = false;
    bool seen_im = false;
    bool first = true;
    while (!c.eof()) {
        int sign = 1;
        if (c.accept('+')) {
        } else if (c.accept('-')) {
            sign = -1;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        first = false;
        c.skip_ws();
        mpq_class term;
        bool bare_i = false;
        if (c.pos < text.size() && (text[c.pos] == 'i' || text[c.pos] == 'I')) {
            term = 1;
            bare_i = true;
        } else {
            term = c.magnitude();
        }
        c.skip_ws();
        bool imaginary = bare_i;
        if (c.pos < text.size() && (text[c.pos] == 'i' || text[c.pos] == 'I')) {
            ++c.pos;
            imaginary = true;
        } else if (bare_i) {
            c.fail("expected 'i'");
        }
        if (imaginary) {
            if (seen_im) c.fail("duplicate imaginary part");
            seen_im = true;
            im = sign * term;
        } else {
            if (seen_re) c.fail("duplicate real part");
            seen_re = true;
            re = sign * term;
        }
    }
    if (!seen_re && !seen_im) c.fail("empty input");
    return {re, im};
}

mpz_class round_half_up(const mpq_class& x) {
    // floor((2p + q) / 2q) with q > 0
    mpz_class num = 2 * x.get_num() + x.get_den();
    mpz_class den = 2 * x.get_den();
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

GaussianInt nearest_round(const GaussianRational& z) { return {round_half_up(z.re), round_half_up(z.im)}; }

bool in_unit_box(const GaussianRational& z) {
    static const mpq_class half(1, 2);
    return z.re >= -half && z.re < half && z.im >= -half && z.im < half;
}

bool in_closed_unit_box(const GaussianRational& z) {
    static const mpq_class half(1, 2);
    return z.re >= -half && z.re <= half && z.im >= -half && z.im <= half;
}

std::uint64_t count_in_square(std::uint64_t n) {
    const auto bound = static_cast<std::int64_t>(n);
    std::uint64_t count = 0;
    // scan a strictly larger window so membership is actually tested
    for (std::int64_t x = -bound - 1; x <= bound + 1; ++x) {
        for (std::int64_t y = -bound - 1; y <= bound + 1; ++y) {
            if (std::max(std::abs(x), std::abs(y)) <= bound) ++count;
        }
    }
    return count;
}

bool norm_order(const LatticePoint& a, const LatticePoint& b) {
    const auto na = a.norm_sq();
    const auto nb = b.norm_sq();
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::vector<LatticePoint> lattice_points_in_norm_range(std::int64_t lo, std::int64_t hi) {
    std::vector<LatticePoint> out;
    if (hi < 0 || hi < lo) return out;
    lo = std::max<std::int64_t>(lo, 0);
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi)));
    while ((r + 1) * (r + 1) <= hi) ++r;
    while (r * r > hi) --r;
    for (std::int64_t x = -r; x <= r; ++x) {
        const std::int64_t rest = hi - x * x;
        auto ymax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        while ((ymax + 1) * (ymax + 1) <= rest) ++ymax;
        while (ymax * ymax > rest) --ymax;
        for (std::int64_t y = -ymax; y <= ymax; ++y) {
            const std::int64_t n = x * x + y * y;
            if (n >= lo) out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end(), norm_order);
    return out;
}

std::vector<LatticePoint> enumerate_lattice_by_norm(bool include_zero, std::size_t limit) {
    if (limit == 0) return {};
    // grow the disk until it holds enough points; the prefix of a full disk is exact
    std::int64_t radius_sq = 16;
    for (;;) {
        // Gauss bound: #disk >= pi (r - sqrt2/2)^2
        const double r = std::sqrt(static_cast<double>(radius_sq));
        const double guaranteed = r > 1.0 ? M_PI * (r - M_SQRT1_2) * (r - M_SQRT1_2) - 1.0 : 0.0;
        if (guaranteed >= static_cast<double>(limit) + 1.0) break;
        radius_sq *= 2;
    }
    auto pts = lattice_points_in_norm_range(include_zero ? 0 : 1, radius_sq);
    while (pts.size() < limit) {
        radius_sq *= 2;
        pts = lattice_points_in_norm_range(include_zero ? 0 : 1, radius_sq);
    }
    pts.resize(limit);
    return pts;
}

std::vector<GaussianInt> enumerate_by_norm(bool include_zero, std::size_t limit) {
    const auto pts = enumerate_lattice_by_norm(include_zero, limit);
    std::vector<GaussianInt> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.to_gaussian());
    return out;
}

}  // namespace hurwitz
