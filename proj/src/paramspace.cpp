#include "formred/paramspace.hpp"

#include "formred/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace formred {

namespace {

using Wide = long double;
using WideComplex = std::complex<long double>;

WideComplex widen(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

double BinaryQuadratic::discriminant() const {
    return static_cast<double>(static_cast<Wide>(a) * c - static_cast<Wide>(b) * b);
}

double HermitianForm::discriminant() const {
    return static_cast<double>(static_cast<Wide>(a) * c - std::norm(widen(b)));
}

BinaryQuadratic BinaryQuadratic::normalized() const {
    const double scale = a != 0.0 ? a : c;
    return {a / scale, b / scale, c / scale};
}

BinaryQuadratic BinaryQuadratic::boundary(const BoundaryPoint2& p) {
    if (p.is_infinity()) return {0.0, 0.0, 1.0};
    const double r = *p.value;
    return {1.0, r, r * r};
}

double HermitianForm::operator()(Complex x, Complex z) const {
    const Complex cross = b * x * std::conj(z);
    return a * std::norm(x) - 2.0 * cross.real() + c * std::norm(z);
}

HermitianForm HermitianForm::normalized() const {
    const double scale = a != 0.0 ? a : c;
    return {a / scale, b / scale, c / scale};
}

HermitianForm HermitianForm::boundary(const BoundaryPoint3& p) {
    if (p.is_infinity()) return {0.0, Complex(0.0), 1.0};
    const Complex beta = *p.value;
    return {1.0, std::conj(beta), std::norm(beta)};
}

PointH2 zero_quadratic(const BinaryQuadratic& q) {
    if (!q.is_positive_definite()) throw NotPositiveDefinite("quadratic is not positive definite");
    return {q.b / q.a, std::sqrt(q.discriminant()) / q.a};
}

BinaryQuadratic inv_zero_quadratic(const PointH2& omega) {
    return {1.0, omega.x, omega.x * omega.x + omega.y * omega.y};
}

PointH3 zero_hermitian(const HermitianForm& h) {
    if (!h.is_positive_definite()) throw NotPositiveDefinite("Hermitian form is not positive definite");
    return {std::conj(h.b) / h.a, std::sqrt(h.discriminant()) / h.a};
}

HermitianForm inv_zero_hermitian(const PointH3& w) {
    return {1.0, std::conj(w.z), std::norm(w.z) + w.t * w.t};
}

HermitianForm embed_real(const BinaryQuadratic& q) { return {q.a, Complex(q.b, 0.0), q.c}; }

BinaryQuadratic act_on_quadratic(const BinaryQuadratic& q, const Mat2& m) {
    const Wide a = q.a, b = q.b, c = q.c;
    const Wide ma = m.a, mb = m.b, mc = m.c, md = m.d;
    const auto value = [&](Wide x, Wide z) { return a * x * x - 2 * b * x * z + c * z * z; };
    const Wide cross = -a * ma * mb + b * (ma * md + mb * mc) - c * mc * md;
    return {static_cast<double>(value(ma, mc)), static_cast<double>(cross), static_cast<double>(value(mb, md))};
}

HermitianForm act_on_hermitian(const HermitianForm& h, const CMat2& m) {
    const Wide a = h.a, c = h.c;
    const WideComplex b = widen(h.b);
    const WideComplex ma = widen(m.a), mb = widen(m.b), mc = widen(m.c), md = widen(m.d);
    const auto value = [&](WideComplex x, WideComplex z) {
        return a * std::norm(x) - 2 * (b * x * std::conj(z)).real() + c * std::norm(z);
    };
    const WideComplex cross = -a * ma * std::conj(mb) + b * ma * std::conj(md) + std::conj(b) * std::conj(mb) * mc -
                              c * mc * std::conj(md);
    return {static_cast<double>(value(ma, mc)), Complex(static_cast<double>(cross.real()), static_cast<double>(cross.imag())),
            static_cast<double>(value(mb, md))};
}

BinaryQuadratic convex_combination(std::span<const double> weights, std::span<const BinaryQuadratic> forms) {
    if (weights.size() != forms.size() || weights.empty())
        throw std::invalid_argument("weights and forms must be nonempty and of equal length");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to one");
    BinaryQuadratic out{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < forms.size(); ++i) {
        out.a += weights[i] * forms[i].a;
        out.b += weights[i] * forms[i].b;
        out.c += weights[i] * forms[i].c;
    }
    if (!out.is_positive_definite()) throw DegenerateCombination("combination collapses onto a boundary point");
    return out;
}

}  // namespace formred
