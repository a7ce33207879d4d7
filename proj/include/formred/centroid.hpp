#pragma once

// Hyperbolic center of mass of points in H2: the unique minimizer of
// sum_j cosh d(w, alpha_j). It has a closed form through the weighted mean
// psi(x, y) = sum_i (x_i / y_i) / sum_i (1 / y_i):
//
//     t = psi(x, y),   u^2 = psi(q(t), y),   q_j(t) = (t - x_j)^2 + y_j^2.

#include "formred/forms.hpp"
#include "formred/hyperbolic.hpp"
#include "formred/roots.hpp"

#include <optional>
#include <span>
#include <utility>

namespace formred {

/// Weighted mean of x with weights proportional to 1/y_i.
/// Throws std::invalid_argument on empty input, length mismatch or y_i <= 0.
double psi(std::span<const double> x, std::span<const double> y);
Rational psi(std::span<const Rational> x, std::span<const Rational> y);

/// The normalized weights (prod_{j != i} y_j) / sum_k (prod_{j != k} y_j).
std::vector<double> psi_weights(std::span<const double> y);

/// q_j(t) = t^2 - 2 x_j t + x_j^2 + y_j^2.
double q_of_t(double t, double x_j, double y_j);

PointH2 center_of_mass_h2(std::span<const PointH2> points);

/// Residuals of the two stationarity equations sum (t - x_j)/y_j and
/// sum (u^2 - q_j(t))/y_j at a candidate center.
std::pair<double, double> center_system_residuals(std::span<const PointH2> points, const PointH2& center);

/// sum_j cosh d(w, alpha_j).
double sum_cosh_distances(std::span<const PointH2> points, const PointH2& w);

/// Center with t and u^2 exactly rational.
struct ExactCenter {
    Rational t;
    Rational u_squared;

    ExactPointH2 point() const { return {t, u_squared}; }
};

/// Exact center of rational points given as x_j and y_j^2 (y_j must be rational,
/// so y_j^2 must be a rational square). Returns nullopt otherwise.
std::optional<ExactCenter> center_exact(std::span<const ExactPointH2> points);

/// Exact center from rational quadratic factors when every 4b_j - a_j^2 is a
/// rational square; nullopt otherwise.
std::optional<ExactCenter> center_exact(std::span<const QuadraticFactor> factors);

/// t = -psi(a, d)/2, u^2 = psi(b, d) - psi(a, d)^2 / 4 with d_j = sqrt(4 b_j - a_j^2).
/// Throws RealRootDetected if a factor has 4b_j <= a_j^2.
PointH2 center_from_quadratic_factors(std::span<const NumericQuadraticFactor> factors);
PointH2 center_from_quadratic_factors(std::span<const QuadraticFactor> factors);

/// The same center written with elementary symmetric functions of the d_j:
///   s = e_{r-1}(d),  t = -(1/2s) sum_i a_i prod_{j != i} d_j,
///   u^2 = prod(d) / (4 s^2) * (s sum_i d_i + sum_{i<j} prod_{k != i,j} d_k (a_i - a_j)^2).
PointH2 alt_center_presentation(std::span<const NumericQuadraticFactor> factors);

/// sum x_j / ||sum x_j|| in the Minkowski norm.
HyperboloidPoint center_of_mass_hyperboloid(std::span<const HyperboloidPoint> points);

/// Brute-force minimization of sum cosh d(., alpha_j): a 200 x 200 grid on
/// [min x - span, max x + span] x [min y / 4, 4 max y] followed by 60 levels of
/// compass-search refinement. Independent of the closed form; used as an oracle.
PointH2 oracle_center(std::span<const PointH2> points, double tol = 1e-12);

}  // namespace formred
