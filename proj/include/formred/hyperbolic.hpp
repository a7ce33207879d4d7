#pragma once

// Upper half-plane H2, upper half-space H3 and the hyperboloid model, with
// their distances and the right actions of SL2(R) / SL2(C).
//
// Right actions follow the convention z . M := M^{-1} z, so that
// (z . M) . N = z . (M N) and the zero map of a transformed form F^M is the
// zero of F acted on by M.

#include "formred/forms.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace formred {

using Complex = std::complex<double>;

/// x + iy with y > 0.
struct PointH2 {
    double x = 0.0;
    double y = 1.0;

    PointH2() = default;
    /// Throws std::domain_error unless y > 0.
    PointH2(double x_, double y_);

    Complex as_complex() const { return {x, y}; }
};

/// z + t j with t > 0.
struct PointH3 {
    Complex z{0.0, 0.0};
    double t = 1.0;

    PointH3() = default;
    /// Throws std::domain_error unless t > 0.
    PointH3(Complex z_, double t_);

    /// The isometric inclusion x + iy -> x + yj.
    static PointH3 from_h2(const PointH2& p) { return PointH3({p.x, 0.0}, p.y); }
};

/// A point of RP^1 = R u {infinity}.
struct BoundaryPoint2 {
    std::optional<double> value;

    static BoundaryPoint2 at(double a) { return {a}; }
    static BoundaryPoint2 infinity() { return {std::nullopt}; }
    bool is_infinity() const { return !value.has_value(); }
};

/// A point of CP^1 = C u {infinity}.
struct BoundaryPoint3 {
    std::optional<Complex> value;

    static BoundaryPoint3 at(Complex a) { return {a}; }
    static BoundaryPoint3 infinity() { return {std::nullopt}; }
    bool is_infinity() const { return !value.has_value(); }
};

/// A triple in R^3, paired by the Minkowski form -x1 y1 - x2 y2 + x3 y3.
struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

/// A point on the upper sheet -x1^2 - x2^2 + x3^2 = 1, x3 > 0.
struct HyperboloidPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 1.0;

    HyperboloidPoint() = default;
    /// Throws std::domain_error if the point is off the sheet (relative 1e-12).
    HyperboloidPoint(double a, double b, double c);

    Vec3 vec() const { return {x1, x2, x3}; }
};

/// Real 2x2 matrix; group elements are expected to have determinant 1.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 from(const UnimodularMatrix& m);
    double det() const { return a * d - b * c; }
    Mat2 inverse() const;
    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
};

/// Complex 2x2 matrix; group elements are expected to have determinant 1.
struct CMat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static CMat2 from(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
    Complex det() const { return a * d - b * c; }
    CMat2 inverse() const;
    friend CMat2 operator*(const CMat2& lhs, const CMat2& rhs);
};

// ---- distances -------------------------------------------------------------

/// Hyperbolic distance in H2, from cosh d = 1 + |z-w|^2 / (2 y1 y2).
double dist_h2(const PointH2& z, const PointH2& w);

/// The same distance computed from the ideal endpoints of the geodesic through
/// z and w (log of a cross-ratio). Kept as an independent route for checks.
double dist_h2_cross_ratio(const PointH2& z, const PointH2& w);

/// ln(((x-a)^2 + y^2) / y) for finite A, and ln(1/y) for A = infinity.
double boundary_dist_h2(const BoundaryPoint2& a, const PointH2& z);

/// Hyperbolic distance in H3, cosh d = 1 + (|z1-z2|^2 + (t1-t2)^2) / (2 t1 t2).
double dist_h3(const PointH3& w1, const PointH3& w2);

/// ln((|z-b|^2 + t^2) / t) for finite b, and ln(1/t) for b = infinity.
double boundary_dist_h3(const PointH3& w, const BoundaryPoint3& b);

/// Ideal endpoints of the geodesic through two distinct points; the first is
/// the endpoint closer to z. For a vertical geodesic the second is infinity.
std::pair<BoundaryPoint2, BoundaryPoint2> geodesic_endpoints(const PointH2& z, const PointH2& w);

/// Point at signed distance s from z along the geodesic towards w.
PointH2 geodesic_point(const PointH2& z, const PointH2& w, double s);

// ---- group actions ---------------------------------------------------------

PointH2 mobius_h2(const PointH2& z, const Mat2& m);
BoundaryPoint2 mobius_h2(const BoundaryPoint2& p, const Mat2& m);
PointH2 mobius_h2(const PointH2& z, const UnimodularMatrix& m);

PointH3 act_h3(const PointH3& w, const CMat2& m);
BoundaryPoint3 act_boundary_h3(const BoundaryPoint3& p, const CMat2& m);

// ---- hyperboloid model -----------------------------------------------------

double minkowski(const Vec3& x, const Vec3& y);
HyperboloidPoint to_hyperboloid(const PointH2& z);
PointH2 from_hyperboloid(const HyperboloidPoint& p);

// ---- SL2(Z) fundamental domain ---------------------------------------------

/// |Re z| <= 1/2 and |z| >= 1, each up to tol.
bool in_fundamental_domain(const PointH2& z, double tol = 1e-12);

struct FundamentalDomainReduction {
    PointH2 point;             ///< z . matrix, inside the fundamental domain
    UnimodularMatrix matrix;
    std::vector<PointH2> path; ///< visited points, starting at z
};

/// Gauss reduction: translate Re z into [-1/2, 1/2], invert when |z| < 1,
/// repeat. Points within `tie` of the boundary are moved to the canonical
/// representative (Re z = +1/2 side, right half of the unit arc).
/// Throws ConvergenceFailure after 10000 steps.
FundamentalDomainReduction reduce_point_to_fundamental_domain(const PointH2& z, double tie = 1e-12);

/// A point of H2 with rational real part and rational y^2; closed under the
/// SL2(Z) action.
struct ExactPointH2 {
    Rational x;
    Rational y_squared;

    PointH2 approx() const;
};

ExactPointH2 mobius_exact(const ExactPointH2& z, const UnimodularMatrix& m);

bool in_fundamental_domain(const ExactPointH2& z);

struct ExactFundamentalDomainReduction {
    ExactPointH2 point;
    UnimodularMatrix matrix;
};

/// Gauss reduction carried out in exact arithmetic with the same canonical
/// boundary convention (no tolerance needed).
ExactFundamentalDomainReduction reduce_point_to_fundamental_domain(const ExactPointH2& z);

}  // namespace formred
