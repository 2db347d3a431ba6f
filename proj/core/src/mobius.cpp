#include "hurwitz/mobius.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

GaussianRational MobiusMatrix::apply(const GaussianRational& z) const {
    const GaussianRational den = GaussianRational(c) * z + GaussianRational(d);
    if (den.is_zero()) throw DomainError("Mobius map evaluated at its pole");
    return (GaussianRational(a) * z + GaussianRational(b)) / den;
}

std::complex<double> MobiusMatrix::apply(std::complex<double> z) const {
    const std::complex<double> ca(a.re.get_d(), a.im.get_d());
    const std::complex<double> cb(b.re.get_d(), b.im.get_d());
    const std::complex<double> cc(c.re.get_d(), c.im.get_d());
    const std::complex<double> cd(d.re.get_d(), d.im.get_d());
    return (ca * z + cb) / (cc * z + cd);
}

MobiusMatrix operator*(const MobiusMatrix& lhs, const MobiusMatrix& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

MobiusMatrix continuant(const std::vector<GaussianInt>& digits) {
    MobiusMatrix m = MobiusMatrix::identity();
    for (const auto& digit : digits) m = m * MobiusMatrix::branch(digit);
    return m;
}

}  // namespace hurwitz
