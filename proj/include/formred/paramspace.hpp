#pragma once

// Positive definite binary quadratics parameterize H2 and positive definite
// Hermitian forms parameterize H3, through their zero maps. Forms are
// projective: only the ray {lambda Q : lambda > 0} matters.

#include "formred/hyperbolic.hpp"

#include <span>

namespace formred {

/// Q = a X^2 - 2b XZ + c Z^2 (note the -2b convention), Delta = ac - b^2.
/// Positive definite when a > 0 and Delta > 0; Delta == 0 forms are the
/// boundary quadratics (X - aZ)^2 and Z^2.
struct BinaryQuadratic {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;

    /// Evaluated in extended precision: Delta is small next to ac for points near the boundary.
    double discriminant() const;
    bool is_positive_definite() const { return a > 0.0 && discriminant() > 0.0; }
    /// Q(x, z).
    double operator()(double x, double z) const { return a * x * x - 2.0 * b * x * z + c * z * z; }
    /// Scaled so that a == 1 (or c == 1 for Z^2).
    BinaryQuadratic normalized() const;

    /// Q_a = (X - aZ)^2, Q_infinity = Z^2.
    static BinaryQuadratic boundary(const BoundaryPoint2& p);
};

/// H = a|X|^2 - b X conj(Z) - conj(b) conj(X) Z + c|Z|^2, Delta = ac - |b|^2.
struct HermitianForm {
    double a = 1.0;
    Complex b{0.0, 0.0};
    double c = 1.0;

    double discriminant() const;
    bool is_positive_definite() const { return a > 0.0 && discriminant() > 0.0; }
    /// H(x, z), always real.
    double operator()(Complex x, Complex z) const;
    HermitianForm normalized() const;

    /// H_beta = |X - beta Z|^2 (so that its zero is beta), H_infinity = |Z|^2.
    static HermitianForm boundary(const BoundaryPoint3& p);
};

/// omega = b/a + i sqrt(Delta)/a. Throws NotPositiveDefinite.
PointH2 zero_quadratic(const BinaryQuadratic& q);

/// Q_omega = (X - omega Z)(X - conj(omega) Z), monic.
BinaryQuadratic inv_zero_quadratic(const PointH2& omega);

/// conj(b)/a + j sqrt(Delta)/a. Throws NotPositiveDefinite.
PointH3 zero_hermitian(const HermitianForm& h);

/// H_w = |X - zZ|^2 + t^2 |Z|^2 for w = z + tj, monic.
HermitianForm inv_zero_hermitian(const PointH3& w);

/// a X^2 - 2b XZ + c Z^2 -> a|X|^2 - b X conj(Z) - b conj(X) Z + c|Z|^2.
HermitianForm embed_real(const BinaryQuadratic& q);

/// Q^M(X, Z) = Q(aX + bZ, cX + dZ).
BinaryQuadratic act_on_quadratic(const BinaryQuadratic& q, const Mat2& m);

/// H^M(X, Z) = H(aX + bZ, cX + dZ).
HermitianForm act_on_hermitian(const HermitianForm& h, const CMat2& m);

/// sum_i w_i Q_i for nonnegative weights summing to one.
/// Throws std::invalid_argument for bad weights or size mismatch, and
/// DegenerateCombination when the sum is not positive definite (all mass on a
/// single boundary point).
BinaryQuadratic convex_combination(std::span<const double> weights, std::span<const BinaryQuadratic> forms);

}  // namespace formred
